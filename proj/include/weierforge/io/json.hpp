#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <weierforge/curve/curve.hpp>
#include <weierforge/numsg/semigroup.hpp>
#include <weierforge/valsg2/value_semigroup.hpp>

namespace weierforge::io
{

using Json = nlohmann::ordered_json;

// Reads a JSON document; malformed text raises ParseError.
Json parse_json(const std::string &text);
Json read_json_file(const std::string &path);

// {generators, gaps, conductor, genus, symmetric, weight}; read back from the gaps.
Json to_json(const numsg::NumericalSemigroup &s);
numsg::NumericalSemigroup semigroup_from_json(const Json &j);

// Series on a branch written as a polynomial in `var` below the truncation.
std::string series_text(const exact::TruncatedSeries &s, const std::string &var);

// {characteristic, conductor: [xi...], basis: [[series-t, series-u], ...]}
// with "strict": false admitting non-Gorenstein rings.
Json to_json(const curve::LocalRing &ring);
curve::LocalRing ring_from_json(const Json &j);

// {characteristic, singularities: [{kind, location | locations, ...}]}:
//   monomial: generators
//   unibranch: conductor, basis (strings in t)
//   two-branch: conductor [xi1, xi2], basis [[t-series, u-series], ...]
Json to_json(const curve::RationalCurve &x);
curve::RationalCurve curve_from_json(const Json &j);

Json to_json(const curve::WeightReport &r);
curve::WeightReport report_from_json(const Json &j);

struct ValueSemigroupReport {
    std::vector<valsg2::ValuePoint> maximals;
    valsg2::ValuePoint conductor;
    int intersection = 0;
    int delta1 = 0;
    int delta2 = 0;
    numsg::NumericalSemigroup s1;
    numsg::NumericalSemigroup s2;
    bool symmetric = false;

    static ValueSemigroupReport of(const valsg2::ValueSemigroup2 &s);
    friend bool operator==(const ValueSemigroupReport &, const ValueSemigroupReport &) = default;
};

// {maximals, conductor, I, delta1, delta2, S1, S2, symmetric}
Json to_json(const ValueSemigroupReport &r);
ValueSemigroupReport semigroup_report_from_json(const Json &j);

} // namespace weierforge::io
