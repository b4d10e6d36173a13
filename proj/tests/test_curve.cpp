#include <doctest.h>

#include <weierforge/curve/curve.hpp>
#include <weierforge/curve/formulas.hpp>
#include <weierforge/error.hpp>

using namespace weierforge;
using namespace weierforge::curve;
using exact::Characteristic;
using numsg::NumericalSemigroup;

namespace
{

NumericalSemigroup sg(std::vector<int> gens)
{
    return NumericalSemigroup::from_generators(std::move(gens));
}

Point at(Characteristic p, long long a)
{
    return Point::from_int(p, a);
}

TruncatedSeries series(Characteristic p, std::vector<std::pair<int, long long>> terms, int truncation)
{
    std::vector<std::pair<int, Scalar>> t;
    for (auto [k, c] : terms) {
        t.emplace_back(k, Scalar::from_int(p, c));
    }
    return TruncatedSeries::from_terms(p, t, truncation);
}

// k + k(t^3 + t^5) + k t^4 + t^6 k[[t]]
Singularity perturbed_cusp(Characteristic p)
{
    return Singularity::unibranch({series(p, {{0, 1}}, 6), series(p, {{3, 1}, {5, 1}}, 6), series(p, {{4, 1}}, 6)}, 6,
                                  at(p, 0));
}

Singularity node(Characteristic p, long long a, long long b)
{
    LocalRing ring(p, {1, 1}, {{series(p, {{0, 1}}, 1), series(p, {{0, 1}}, 1)}});
    return Singularity::two_branch(ring, at(p, a), at(p, b));
}

exact::RationalFunction rat(Characteristic p, std::vector<long long> n, std::vector<long long> d)
{
    return exact::RationalFunction(Polynomial::from_ints(p, n), Polynomial::from_ints(p, d));
}

// Every expected differential is a combination of the computed basis.
bool same_span(const DualizingBasis &b, const std::vector<exact::RationalFunction> &expected)
{
    if (expected.size() != b.numerators.size()) {
        return false;
    }
    std::vector<Polynomial> all = b.numerators;
    for (const auto &r : expected) {
        const auto scaled = r * exact::RationalFunction(b.denominator);
        if (scaled.denominator().degree() != 0) {
            return false;
        }
        all.push_back(scaled.numerator() * scaled.denominator().lead().inverse());
    }
    int d = 0;
    for (const auto &a : all) {
        d = std::max(d, a.degree());
    }
    exact::ScalarMatrix m;
    for (const auto &a : all) {
        std::vector<Scalar> row;
        for (int i = 0; i <= d; ++i) {
            row.push_back(a.coeff(static_cast<std::size_t>(i)));
        }
        m.push_back(row);
    }
    return exact::rank(m) == b.numerators.size();
}

Polynomial monic(const Polynomial &f)
{
    return f * f.lead().inverse();
}

} // namespace

TEST_CASE("monomial <3,4> in characteristic 2: a single weight 32 point")
{
    const RationalCurve x(2, {Singularity::monomial(sg({3, 4}), at(2, 0))});
    CHECK(x.genus() == 3);
    const auto basis = dualizing_basis(x);
    CHECK(same_span(basis, {rat(2, {1}, {0, 0, 0, 0, 0, 0, 1}), rat(2, {1}, {0, 0, 0, 1}), rat(2, {1}, {0, 0, 1})}));
    CHECK(canonical_orders(x, basis).to_string() == "0,1,4");
    CHECK(singular_weight(x, 0, basis) == 32);
    const auto r = weight_report(x);
    CHECK(r.n == 5);
    REQUIRE(r.singular.size() == 1);
    CHECK(r.singular[0].weight == 32);
    CHECK(r.smooth.entries.empty());
    CHECK(r.total == 32);
    CHECK(r.expected == 32);
    CHECK(point_weight(x, at(2, 1)) == 0);
    CHECK(point_weight(x, Point::infinity(2)) == 0);
}

TEST_CASE("monomial <3,4> in characteristic 0: weight 22 and 2 at infinity")
{
    const RationalCurve x(0, {Singularity::monomial(sg({3, 4}), at(0, 0))});
    const auto r = weight_report(x);
    CHECK(r.orders.to_string() == "0,1,2");
    CHECK(r.singular[0].weight == 22);
    REQUIRE(r.smooth.entries.size() == 1);
    CHECK_FALSE(r.smooth.entries[0].factor.has_value());
    CHECK(r.smooth.entries[0].multiplicity == 2);
    CHECK(r.total == 24);
    CHECK(r.total == 3 * 3 * 3 - 3);
}

TEST_CASE("perturbed cusp: dualizing basis and generator")
{
    const RationalCurve x(0, {perturbed_cusp(0)});
    CHECK(x.singularities()[0].semigroup()->to_string() == "<3,4>");
    const auto basis = dualizing_basis(x);
    CHECK(same_span(basis, {rat(0, {1, 0, -1}, {0, 0, 0, 0, 0, 0, 1}), rat(0, {1}, {0, 0, 1}), rat(0, {1}, {0, 0, 0, 1})}));
    const auto tau = basis.generator(0);
    CHECK(tau.valuation(at(0, 0)) == -6);
    // tau_1 = (1 - t^2) dt / t^6 generates; another generator differs by a unit.
    const auto ratio = tau / rat(0, {1, 0, -1}, {0, 0, 0, 0, 0, 0, 1});
    CHECK(ratio.valuation(at(0, 0)) == 0);
}

TEST_CASE("perturbed cusp weights by characteristic")
{
    SUBCASE("characteristic 0: weight 22 and the two square roots of 6")
    {
        const auto r = weight_report(RationalCurve(0, {perturbed_cusp(0)}));
        CHECK(r.orders.to_string() == "0,1,2");
        CHECK(r.singular[0].weight == 22);
        REQUIRE(r.smooth.entries.size() == 1);
        CHECK(monic(*r.smooth.entries[0].factor) == Polynomial::from_ints(0, {-6, 0, 1}));
        CHECK(r.smooth.entries[0].multiplicity == 1);
        CHECK(r.smooth.point_count() == 2);
        CHECK(r.total == 24);
    }
    SUBCASE("characteristic 5: 6 is 1, so the smooth points are +-1")
    {
        const auto r = weight_report(RationalCurve(5, {perturbed_cusp(5)}));
        CHECK(r.singular[0].weight == 22);
        CHECK(r.smooth.point_count() == 2);
        for (const auto &e : r.smooth.entries) {
            CHECK(e.degree == 1);
            CHECK(e.multiplicity == 1);
        }
    }
    SUBCASE("characteristic 3: the singular point takes everything")
    {
        const auto r = weight_report(RationalCurve(3, {perturbed_cusp(3)}));
        CHECK(r.singular[0].weight == 24);
        CHECK(r.smooth.entries.empty());
    }
    SUBCASE("characteristic 2")
    {
        const auto r = weight_report(RationalCurve(2, {perturbed_cusp(2)}));
        CHECK(r.singular[0].weight == 24);
        CHECK(r.smooth.entries.empty());
    }
}

TEST_CASE("two <3,4> singularities at 0 and 1")
{
    const RationalCurve x(0, {Singularity::monomial(sg({3, 4}), at(0, 0)), Singularity::monomial(sg({3, 4}), at(0, 1))});
    CHECK(x.genus() == 6);
    const auto r = weight_report(x);
    CHECK(r.n == 15);
    CHECK(r.singular[0].weight == 103);
    CHECK(r.singular[1].weight == 103);
    CHECK(r.smooth.total() == 4);
    CHECK(r.smooth.point_count() == 4);
    for (const auto &e : r.smooth.entries) {
        CHECK(e.multiplicity == 1);
    }
    CHECK(r.total == 210);
}

TEST_CASE("node over 0 and 1")
{
    const RationalCurve x(0, {node(0, 0, 1)});
    CHECK(x.genus() == 1);
    const auto basis = dualizing_basis(x);
    CHECK(same_span(basis, {rat(0, {1}, {0, -1, 1})}));
    const auto r = weight_report(x);
    CHECK(r.n == 0);
    CHECK(r.singular[0].weight == 0);
    CHECK(r.total == 0);
}

TEST_CASE("node plus cusp: two-branch generator and weights sum")
{
    const RationalCurve x(0, {node(0, 0, 1), Singularity::monomial(sg({2, 3}), Point::infinity(0))});
    CHECK(x.genus() == 2);
    const auto r = weight_report(x);
    CHECK(r.total == r.expected);
    CHECK(r.expected == 2 * (2 + r.n));
    for (const auto &w : r.singular) {
        CHECK(w.weight >= 2LL * w.delta * r.n);
    }
}

TEST_CASE("invalid curves")
{
    CHECK_THROWS_AS(RationalCurve(0, {}), Error);
    try {
        RationalCurve(0, {Singularity::monomial(sg({3, 4}), at(0, 0)), Singularity::monomial(sg({2, 3}), at(0, 0))});
        FAIL("overlapping locations accepted");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::invalid_argument);
    }
    try {
        Singularity::monomial(sg({3, 4, 5}), at(0, 0));
        FAIL("non-symmetric semigroup accepted");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::not_gorenstein);
    }
    try {
        Singularity::unibranch({series(0, {{0, 1}}, 3)}, 3, at(0, 0));
        FAIL("non-Gorenstein ring accepted");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::not_gorenstein);
    }
    try {
        Singularity::unibranch({series(0, {{0, 1}}, 6), series(0, {{2, 1}}, 6), series(0, {{3, 1}}, 6)}, 6, at(0, 0));
        FAIL("ring not closed under products accepted");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::not_closed);
    }
}

TEST_CASE("closed forms for one monomial singularity")
{
    const auto w2 = monomial_curve_weights(sg({3, 4}), 2);
    CHECK(w2.at_singularity == 32);
    CHECK(w2.at_infinity == 0);
    CHECK(w2.orders.to_string() == "0,1,4");
    const auto w0 = monomial_curve_weights(sg({3, 4}), 0);
    CHECK(w0.at_singularity == 22);
    CHECK(w0.at_infinity == 2);
    CHECK(w0.orders.to_string() == "0,1,2");
    const auto cusp = monomial_curve_weights(sg({2, 3}), 0);
    CHECK(cusp.at_singularity == 0);
    CHECK(cusp.at_infinity == 0);
    CHECK_THROWS_AS(monomial_curve_weights(sg({3, 4, 5}), 0), Error);
}

TEST_CASE("closed forms agree with the pipeline for small monomial semigroups")
{
    for (int g = 1; g <= 4; ++g) {
        for (const auto &s : numsg::semigroups_of_genus(g)) {
            if (!s.is_symmetric()) {
                continue;
            }
            for (Characteristic p : {0, 2, 3, 5}) {
                CAPTURE(s.to_string());
                CAPTURE(p);
                const auto closed = monomial_curve_weights(s, p);
                const RationalCurve x(p, {Singularity::monomial(s, at(p, 0))});
                const auto r = weight_report(x);
                CHECK(r.orders == closed.orders);
                CHECK(r.singular[0].weight == closed.at_singularity);
                CHECK(point_weight(x, Point::infinity(p)) == closed.at_infinity);
                CHECK(r.total == closed.at_singularity + closed.at_infinity);
            }
        }
    }
}

TEST_CASE("singular weight from the resolved curve")
{
    CHECK(unibranch_weight(sg({2, 3}), 5, 0) == 24);
    CHECK(unibranch_weight(sg({3, 4}), 6, 0) == 103);
    CHECK(unibranch_weight(sg({3, 4}), 3, 0) == 22);

    // <3,4> at 0 next to <3,4> at infinity: on the curve with 0 resolved,
    // the point 0 is the pole of the chart coordinate at infinity.
    const RationalCurve x(0, {Singularity::monomial(sg({3, 4}), at(0, 0)),
                              Singularity::monomial(sg({3, 4}), Point::infinity(0))});
    const RationalCurve y = partial_normalization(x, 0);
    const long long w_y = point_weight(y, at(0, 0));
    CHECK(w_y == 2);
    CHECK(point_weight(x, at(0, 0)) == unibranch_weight(sg({3, 4}), 6, w_y));
}

TEST_CASE("two monomial singularities by placement")
{
    const auto s = sg({3, 4});
    const auto c3 = two_monomial_weights(s, s, TwoPointCase::generic);
    CHECK(c3.first == 103);
    CHECK(c3.second == 103);
    CHECK(c3.smooth_count == 4);
    const auto c1 = two_monomial_weights(s, s, TwoPointCase::reciprocal);
    CHECK(c1.first == 105);
    CHECK(c1.second == 105);
    CHECK(c1.smooth_count == 0);
    const auto c2 = two_monomial_weights(s, s, TwoPointCase::one_sided);
    CHECK(c2.first == 105);
    CHECK(c2.second == 103);
    CHECK(c2.smooth_count == 2);
    CHECK_THROWS_AS(two_point_case_from_tag(4), Error);

    CHECK(two_point_case(at(0, 0), Point::infinity(0)) == TwoPointCase::reciprocal);
    CHECK(two_point_case(Point::infinity(0), at(0, 1)) == TwoPointCase::one_sided);
    CHECK(two_point_case(at(0, 0), at(0, 1)) == TwoPointCase::generic);
    CHECK_FALSE(two_point_case(at(0, 1), Point::infinity(0)).has_value());

    CHECK(unibranch_smooth_count({s, s}) == 4);
    CHECK(unibranch_smooth_count({sg({2, 3})}) == 0);
}

TEST_CASE("closed forms for two singularities agree with the pipeline")
{
    const auto s = sg({3, 4});
    const auto t = sg({2, 5});
    struct Placement {
        Point a1, a2;
    };
    for (const auto &pl : {Placement{at(0, 0), Point::infinity(0)}, Placement{Point::infinity(0), at(0, 1)},
                           Placement{at(0, 0), at(0, 1)}, Placement{at(0, 2), Point::infinity(0)}}) {
        CAPTURE(pl.a1.to_string());
        CAPTURE(pl.a2.to_string());
        const RationalCurve x(0, {Singularity::monomial(s, pl.a1), Singularity::monomial(t, pl.a2)});
        const auto r = weight_report(x);
        const auto closed = two_monomial_weights_at(s, pl.a1, t, pl.a2);
        CHECK(r.singular[0].weight == closed.first);
        CHECK(r.singular[1].weight == closed.second);
        CHECK(r.smooth.total() == closed.smooth_count);
    }
}

TEST_CASE("three cusps")
{
    const auto c = sg({2, 3});
    const RationalCurve x(0, {Singularity::monomial(c, at(0, 0)), Singularity::monomial(c, at(0, 1)),
                              Singularity::monomial(c, at(0, 2))});
    const auto r = weight_report(x);
    for (const auto &w : r.singular) {
        CHECK(w.weight == 8);
    }
    CHECK(r.smooth.total() == 0);
    CHECK(r.total == 24);
}
