#include <weierforge/io/examples.hpp>

#include <algorithm>
#include <sstream>

#include <weierforge/curve/formulas.hpp>
#include <weierforge/error.hpp>
#include <weierforge/padic/padic.hpp>
#include <weierforge/valsg2/adapted.hpp>

namespace weierforge::io
{

using curve::LocalRing;
using curve::RationalCurve;
using curve::Singularity;
using exact::Characteristic;
using exact::Point;
using exact::Polynomial;
using exact::Scalar;
using exact::TruncatedSeries;
using numsg::NumericalSemigroup;

bool Reproduction::passed() const
{
    return std::all_of(runs.begin(), runs.end(), [](const ExampleRun &r) {
        return std::all_of(r.checks.begin(), r.checks.end(), [](const Check &c) { return c.ok(); });
    });
}

Json Reproduction::to_json() const
{
    Json runs_json = Json::array();
    for (const auto &r : runs) {
        Json checks = Json::array();
        for (const auto &c : r.checks) {
            checks.push_back(Json{{"what", c.what}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok()}});
        }
        runs_json.push_back(Json{{"label", r.label}, {"checks", std::move(checks)}, {"report", r.report}});
    }
    return Json{{"example", name}, {"summary", summary}, {"passed", passed()}, {"runs", std::move(runs_json)}};
}

const std::vector<ExampleInfo> &example_catalog()
{
    static const std::vector<ExampleInfo> catalog{
        {"example-2.1", "monomial <3,4> in characteristic 2: one point of weight 32"},
        {"example-2.9", "perturbed cusp k + k(t^3 + t^5) + k t^4 in characteristics 0, 3 and 2"},
        {"example-3.6", "two monomial <3,4> points at 0 and 1, genus 6"},
        {"semigroup-4-6-11", "<4,6,11> in characteristic 2 uses all the weight"},
        {"semigroup-3-5", "<3,5> in characteristic 3 uses all the weight"},
        {"semigroup-4-5", "<4,5> in characteristic 5 uses all the weight"},
        {"node", "ordinary node over 0 and 1, genus 1"},
        {"tacnode", "tacnode over 0 and 1, genus 2"},
        {"example-4.10", "two-branch ring with value semigroup conductor (7,3) and non-symmetric first projection"},
    };
    return catalog;
}

namespace
{

template <class T>
std::string str(const T &v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string str(bool b)
{
    return b ? "true" : "false";
}

void check(ExampleRun &run, std::string what, const std::string &expected, const std::string &actual)
{
    run.checks.push_back({std::move(what), expected, actual});
}

template <class T>
void check(ExampleRun &run, std::string what, const T &expected, const T &actual)
{
    check(run, std::move(what), str(expected), str(actual));
}

TruncatedSeries mono(Characteristic p, int k, int t)
{
    return TruncatedSeries::from_terms(p, {{k, Scalar::one(p)}}, t);
}

Polynomial monic(const Polynomial &f)
{
    return f * Polynomial::constant(f.lead().inverse());
}

ExampleRun curve_run(const std::string &label, const RationalCurve &x, curve::WeightReport *out = nullptr)
{
    ExampleRun run;
    run.label = label;
    const auto r = curve::weight_report(x);
    run.report = to_json(r);
    run.text = report_text(x, r);
    if (out) {
        *out = r;
    }
    return run;
}

Reproduction example_2_1()
{
    Reproduction rep;
    const RationalCurve x(2, {Singularity::monomial(NumericalSemigroup::from_generators({3, 4}), Point::from_int(2, 0))});
    curve::WeightReport r;
    auto run = curve_run("characteristic 2", x, &r);
    check(run, "orders", std::string("0,1,4"), r.orders.to_string());
    check(run, "weight at 0", 32LL, r.singular[0].weight);
    check(run, "smooth Weierstrass points", std::size_t{0}, r.smooth.entries.size());
    check(run, "total", 32LL, r.total);
    rep.runs.push_back(std::move(run));
    return rep;
}

Singularity perturbed_cusp(Characteristic p)
{
    const auto t35 = TruncatedSeries::from_terms(p, {{3, Scalar::one(p)}, {5, Scalar::one(p)}}, 6);
    return Singularity::unibranch({mono(p, 0, 6), t35, mono(p, 4, 6)}, 6, Point::from_int(p, 0));
}

Reproduction example_2_9(std::optional<Characteristic> only)
{
    Reproduction rep;
    for (Characteristic p : {0, 3, 2}) {
        if (only && *only != p) {
            continue;
        }
        curve::WeightReport r;
        auto run = curve_run("characteristic " + std::to_string(p), RationalCurve(p, {perturbed_cusp(p)}), &r);
        if (p == 0) {
            check(run, "weight at 0", 22LL, r.singular[0].weight);
            check(run, "smooth entries", std::size_t{1}, r.smooth.entries.size());
            if (r.smooth.entries.size() == 1 && r.smooth.entries[0].factor) {
                const auto &e = r.smooth.entries[0];
                check(run, "smooth factor", std::string("t^2 - 6"), monic(*e.factor).to_string());
                check(run, "smooth multiplicity", 1LL, e.multiplicity);
                check(run, "smooth degree", 2, e.degree);
            }
        } else {
            check(run, "weight at 0", 24LL, r.singular[0].weight);
            check(run, "smooth Weierstrass points", std::size_t{0}, r.smooth.entries.size());
        }
        check(run, "total", 24LL, r.total);
        rep.runs.push_back(std::move(run));
    }
    ensure(!rep.runs.empty(), ErrorCode::invalid_argument, "example-2.9 runs in characteristics 0, 3 and 2");
    return rep;
}

Reproduction example_3_6()
{
    Reproduction rep;
    const auto s = NumericalSemigroup::from_generators({3, 4});
    const RationalCurve x(0, {Singularity::monomial(s, Point::from_int(0, 0)), Singularity::monomial(s, Point::from_int(0, 1))});
    curve::WeightReport r;
    auto run = curve_run("characteristic 0", x, &r);
    check(run, "genus", 6, x.genus());
    check(run, "weight at 0", 103LL, r.singular[0].weight);
    check(run, "weight at 1", 103LL, r.singular[1].weight);
    check(run, "smooth weight", 4LL, r.smooth.total());
    check(run, "smooth points", std::size_t{4}, r.smooth.point_count());
    check(run, "total", 210LL, r.total);
    rep.runs.push_back(std::move(run));
    return rep;
}

Reproduction full_weight(std::vector<int> gens, Characteristic p)
{
    Reproduction rep;
    const auto s = NumericalSemigroup::from_generators(std::move(gens));
    const RationalCurve x(p, {Singularity::monomial(s, Point::from_int(p, 0))});
    curve::WeightReport r;
    auto run = curve_run("characteristic " + std::to_string(p), x, &r);
    check(run, "uses all the weight", true, padic::uses_all_weight(s.gaps(), static_cast<std::uint64_t>(p)));
    const auto closed = curve::monomial_curve_weights(s, p);
    check(run, "closed form weight at infinity", 0LL, closed.at_infinity);
    const long long g = s.genus();
    const long long full = (2 * g - 2) * (g + r.n);
    check(run, "weight at 0", full, r.singular[0].weight);
    check(run, "closed form weight at 0", full, closed.at_singularity);
    check(run, "smooth weight", 0LL, r.smooth.total());
    rep.runs.push_back(std::move(run));
    return rep;
}

RationalCurve two_branch_curve(const LocalRing &ring, Characteristic p)
{
    return RationalCurve(p, {Singularity::two_branch(ring, Point::from_int(p, 0), Point::from_int(p, 1))});
}

// Value-semigroup data, the adapted-basis formula and the direct weight.
ExampleRun two_branch_run(const LocalRing &ring, const RationalCurve &x)
{
    const valsg2::ValueSemigroup2 s(ring);
    curve::WeightReport r;
    auto run = curve_run("characteristic " + std::to_string(x.characteristic()), x, &r);
    const auto sr = ValueSemigroupReport::of(s);
    run.report = Json{{"semigroup", io::to_json(sr)}, {"weights", run.report}};
    run.text = value_semigroup_text(sr) + run.text;
    const auto w = valsg2::v_systems_weights(x);
    const long long formula = valsg2::two_branch_weight(s, x.genus(), w.first, w.second);
    check(run, "formula equals direct weight", formula, r.singular[0].weight);
    const long long g = x.genus();
    check(run, "total", g * g * g - g, r.total);
    return run;
}

Reproduction node()
{
    Reproduction rep;
    const LocalRing ring = valsg2::validate_ring(0, 1, 1, {{mono(0, 0, 1), mono(0, 0, 1)}});
    const auto x = two_branch_curve(ring, 0);
    auto run = two_branch_run(ring, x);
    const valsg2::ValueSemigroup2 s(ring);
    check(run, "I", 1, s.intersection());
    check(run, "weight", 0LL, curve::point_weight(x, Point::from_int(0, 0)));
    check(run, "node formula", 0LL, valsg2::node_weight(1, 0, 0));
    rep.runs.push_back(std::move(run));
    return rep;
}

Reproduction tacnode()
{
    Reproduction rep;
    const LocalRing ring =
        valsg2::validate_ring(0, 2, 2, {{mono(0, 0, 2), mono(0, 0, 2)}, {mono(0, 1, 2), mono(0, 1, 2)}});
    const auto x = two_branch_curve(ring, 0);
    auto run = two_branch_run(ring, x);
    const auto r = curve::weight_report(x);
    check(run, "weight", 4LL, r.singular[0].weight);
    check(run, "smooth weight", 2LL, r.smooth.total());
    rep.runs.push_back(std::move(run));
    return rep;
}

Reproduction example_4_10()
{
    Reproduction rep;
    const Characteristic p = 0;
    const LocalRing ring = valsg2::validate_ring(p, 7, 3,
                                                 {{mono(p, 0, 7), mono(p, 0, 3)},
                                                  {mono(p, 3, 7), mono(p, 1, 3)},
                                                  {mono(p, 4, 7), TruncatedSeries(p, 0, {}, 3)},
                                                  {mono(p, 5, 7), TruncatedSeries(p, 0, {}, 3)},
                                                  {mono(p, 6, 7), mono(p, 2, 3)}});
    const auto x = two_branch_curve(ring, p);
    auto run = two_branch_run(ring, x);
    const valsg2::ValueSemigroup2 s(ring);
    check(run, "delta", 5, s.delta());
    check(run, "conductor", std::string("(7,3)"), s.conductor().to_string());
    check(run, "I", 3, s.intersection());
    check(run, "delta1", 2, s.delta1());
    check(run, "delta2", 0, s.delta2());
    check(run, "S1 symmetric", false, s.first_projection().is_symmetric());
    check(run, "top edge points", std::size_t{2}, valsg2::edge_points(s).top.size());
    const auto r = curve::weight_report(x);
    check(run, "weight", 108LL, r.singular[0].weight);
    check(run, "smooth weight", 12LL, r.smooth.total());
    rep.runs.push_back(std::move(run));
    return rep;
}

} // namespace

Reproduction reproduce(const std::string &name, std::optional<Characteristic> characteristic)
{
    Reproduction rep;
    if (name == "example-2.1") {
        rep = example_2_1();
    } else if (name == "example-2.9") {
        rep = example_2_9(characteristic);
    } else if (name == "example-3.6") {
        rep = example_3_6();
    } else if (name == "semigroup-4-6-11") {
        rep = full_weight({4, 6, 11}, 2);
    } else if (name == "semigroup-3-5") {
        rep = full_weight({3, 5}, 3);
    } else if (name == "semigroup-4-5") {
        rep = full_weight({4, 5}, 5);
    } else if (name == "node") {
        rep = node();
    } else if (name == "tacnode") {
        rep = tacnode();
    } else if (name == "example-4.10") {
        rep = example_4_10();
    } else {
        fail(ErrorCode::invalid_argument, "unknown example '" + name + "'");
    }
    rep.name = name;
    for (const auto &e : example_catalog()) {
        if (e.name == name) {
            rep.summary = e.summary;
        }
    }
    return rep;
}

std::string report_text(const RationalCurve &x, const curve::WeightReport &r)
{
    std::ostringstream os;
    os << "genus " << r.genus << ", characteristic " << r.characteristic << '\n';
    os << "orders " << r.orders.to_string() << " (N = " << r.n << ")\n";
    os << "singular weights:\n";
    for (const auto &w : r.singular) {
        os << "  " << x.singularities()[w.singularity].describe() << " (delta " << w.delta << "): " << w.weight
           << '\n';
    }
    if (r.smooth.entries.empty()) {
        os << "smooth Weierstrass points: none\n";
    } else {
        os << "smooth Weierstrass points (" << r.smooth.point_count() << " points, weight " << r.smooth.total()
           << "):\n";
        for (const auto &e : r.smooth.entries) {
            os << "  ";
            if (e.degree == 1) {
                os << "t = " << e.location();
            } else {
                os << "roots of " << e.factor->to_string() << " (" << e.degree << " points)";
            }
            os << ": weight " << e.multiplicity << '\n';
        }
    }
    os << "total " << r.total << " (expected " << r.expected << ")\n";
    return os.str();
}

namespace
{

std::string joined(const std::vector<int> &v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? "," : "") << v[i];
    }
    return v.empty() ? "none" : os.str();
}

} // namespace

std::string semigroup_text(const NumericalSemigroup &s)
{
    std::ostringstream os;
    os << s.to_string() << '\n';
    os << "gaps " << joined(s.gaps()) << '\n';
    os << "conductor " << s.conductor() << ", genus " << s.genus() << ", weight " << s.weight() << '\n';
    os << (s.is_symmetric() ? "symmetric" : "not symmetric") << '\n';
    return os.str();
}

std::string value_semigroup_text(const ValueSemigroupReport &r)
{
    std::ostringstream os;
    os << "conductor " << r.conductor.to_string() << ", I = " << r.intersection << ", delta1 = " << r.delta1
       << ", delta2 = " << r.delta2 << '\n';
    os << "maximals";
    for (const auto &m : r.maximals) {
        os << ' ' << m.to_string();
    }
    os << '\n';
    os << "S1 " << r.s1.to_string() << ", S2 " << r.s2.to_string() << '\n';
    os << (r.symmetric ? "symmetric" : "not symmetric") << '\n';
    return os.str();
}

} // namespace weierforge::io
