#include <doctest.h>

#include <weierforge/error.hpp>
#include <weierforge/exact/linalg.hpp>
#include <weierforge/wronski/wronski.hpp>

using namespace weierforge;
using namespace weierforge::exact;
using namespace weierforge::wronski;

namespace
{

RationalFunction rat(Characteristic p, std::vector<long long> n, std::vector<long long> d = {1})
{
    return RationalFunction(Polynomial::from_ints(p, n), Polynomial::from_ints(p, d));
}

// (1, t^4/(1 - t^2), t^3/(1 - t^2))
LinearSystem cusp_system(Characteristic p)
{
    return LinearSystem({rat(p, {1}), rat(p, {0, 0, 0, 0, 1}, {1, 0, -1}), rat(p, {0, 0, 0, 1}, {1, 0, -1})});
}

// Classical Wronskian with ordinary derivatives divided by 0! 1! ... (s-1)!,
// which equals the Hasse-Wronskian in characteristic 0.
RationalFunction ordinary_wronskian(const std::vector<RationalFunction> &f)
{
    RationalMatrix m;
    std::vector<RationalFunction> row = f;
    Scalar fact = Scalar::one(0);
    Scalar scale = Scalar::one(0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        m.push_back(row);
        for (auto &x : row) {
            const RationalFunction num = RationalFunction(x.numerator().derivative()) * RationalFunction(x.denominator())
                                         - RationalFunction(x.numerator()) * RationalFunction(x.denominator().derivative());
            x = num / RationalFunction(x.denominator() * x.denominator());
        }
        scale *= fact;
        fact *= Scalar::from_int(0, static_cast<long long>(i + 1));
    }
    return *fraction_free_rank_det(m).det / RationalFunction::constant(scale);
}

} // namespace

TEST_CASE("order sequences of function tuples")
{
    CHECK(LinearSystem({rat(2, {1}), rat(2, {0, 0, 0, 1}), rat(2, {0, 0, 0, 0, 1})}).orders().terms()
          == std::vector<int>{0, 1, 4});
    CHECK(LinearSystem({rat(0, {1}), rat(0, {0, 1}), rat(0, {0, 0, 1})}).orders().terms() == std::vector<int>{0, 1, 2});
    CHECK(cusp_system(0).orders().terms() == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(LinearSystem({rat(0, {1, 1}), rat(0, {2, 2})}), Error);
}

TEST_CASE("wronskians")
{
    const LinearSystem v({rat(2, {1}), rat(2, {0, 0, 0, 1}), rat(2, {0, 0, 0, 0, 1})});
    CHECK(wronskian(v, v.orders()) == rat(2, {0, 0, 1}));

    const LinearSystem line({rat(0, {1}), rat(0, {0, 1})});
    CHECK(wronskian(line, line.orders()) == rat(0, {1}));

    const LinearSystem c = cusp_system(0);
    const RationalFunction w = wronskian(c, c.orders());
    CHECK(w == ordinary_wronskian(c.functions()));
    // -t^4 (t^2 - 6) / (t^2 - 1)^3, from symbolic differentiation.
    CHECK(w == rat(0, {0, 0, 0, 0, 6, 0, -1}, {-1, 0, 3, 0, -3, 0, 1}));

    CHECK_THROWS_AS(wronskian(c, padic::OrderSequence({0, 1}, 0)), Error);
}

TEST_CASE("local orders")
{
    const std::vector<int> gaps{1, 2, 5};
    std::vector<RationalFunction> f;
    for (int l : gaps) {
        f.push_back(RationalFunction::monomial(Scalar::one(0), l - 1));
    }
    const LinearSystem v(f);
    CHECK(vq_orders(v, Point::from_int(0, 0)) == std::vector<int>{0, 1, 4});
    const LinearSystem quad({rat(0, {1}), rat(0, {0, 1}), rat(0, {0, 0, 1})});
    CHECK(vq_orders(quad, Point::from_int(0, 5)) == std::vector<int>{0, 1, 2});
    CHECK(vq_orders(cusp_system(0), Point::infinity(0)) == std::vector<int>{0, 1, 2});
}

TEST_CASE("smooth weights")
{
    const LinearSystem quad({rat(0, {1}), rat(0, {0, 1}), rat(0, {0, 0, 1})});
    const auto w = smooth_weight(quad, Point::from_int(0, 7));
    CHECK(w.weight == 0);
    CHECK(w.lower_bound == 0);
    CHECK(w.bound_is_exact);

    const LinearSystem v({rat(2, {1}), rat(2, {0, 0, 0, 1}), rat(2, {0, 0, 0, 0, 1})});
    const std::vector<Point> singular{Point::from_int(2, 0)};
    CHECK(smooth_weight(v, Point::from_int(2, 1), singular).weight == 0);
    CHECK(smooth_weight(v, Point::infinity(2), singular).weight == 0);
    try {
        smooth_weight(v, Point::from_int(2, 0), singular);
        FAIL("singular point accepted");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::singular_point);
    }

    // At t = 0 the orders are 0, 3, 4 against 0, 1, 4: bound 2, reached.
    const auto at0 = smooth_weight(v, Point::from_int(2, 0));
    CHECK(at0.weight == 2);
    CHECK(at0.lower_bound == 2);
}

TEST_CASE("wronskian divisors")
{
    const LinearSystem c = cusp_system(0);
    const auto d = wronskian_divisor(c, {Point::from_int(0, 0)});
    REQUIRE(d.entries.size() == 1);
    CHECK(d.entries[0].factor->to_string() == "t^2 - 6");
    CHECK(d.entries[0].multiplicity == 1);
    CHECK(d.entries[0].degree == 2);

    // The full divisor has degree s deg L + (2g - 2) N with deg L = 4, g = 0.
    const auto full = wronskian_divisor(c);
    CHECK(full.total() == global_weight_total(3, 4, 0, 3));

    // Over F_5, t^2 - 6 = (t - 1)(t + 1).
    const auto d5 = wronskian_divisor(cusp_system(5), {Point::from_int(5, 0)});
    REQUIRE(d5.entries.size() == 2);
    CHECK(d5.entries[0].degree == 1);
    CHECK(d5.point_count() == 2);
}

TEST_CASE("global totals")
{
    CHECK(global_weight_total(3, 4, 3, 5) == 32);
    CHECK(global_weight_total(6, 10, 6, 15) == 210);
    CHECK(global_weight_total(1, 9, 4, 0) == 9);
}
