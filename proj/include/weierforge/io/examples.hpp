#pragma once

#include <optional>
#include <string>
#include <vector>

#include <weierforge/io/json.hpp>

namespace weierforge::io
{

// One computed quantity against its known value.
struct Check {
    std::string what;
    std::string expected;
    std::string actual;

    bool ok() const
    {
        return expected == actual;
    }
};

struct ExampleRun {
    std::string label;
    std::vector<Check> checks;
    Json report;
    std::string text;
};

struct Reproduction {
    std::string name;
    std::string summary;
    std::vector<ExampleRun> runs;

    bool passed() const;
    Json to_json() const;
};

struct ExampleInfo {
    std::string name;
    std::string summary;
};

const std::vector<ExampleInfo> &example_catalog();

// Recomputes a named example from scratch. `characteristic` restricts
// examples that run over several characteristics. Unknown names raise
// InvalidArgument.
Reproduction reproduce(const std::string &name, std::optional<exact::Characteristic> characteristic = std::nullopt);

// Human-readable forms shared with the command line.
std::string report_text(const curve::RationalCurve &x, const curve::WeightReport &r);
std::string semigroup_text(const numsg::NumericalSemigroup &s);
std::string value_semigroup_text(const ValueSemigroupReport &r);

} // namespace weierforge::io
