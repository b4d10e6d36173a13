#include <doctest.h>

#include <weierforge/error.hpp>
#include <weierforge/exact/binomial.hpp>
#include <weierforge/exact/linalg.hpp>
#include <weierforge/exact/polynomial.hpp>
#include <weierforge/exact/rational_function.hpp>
#include <weierforge/exact/series.hpp>

using namespace weierforge;
using namespace weierforge::exact;

namespace
{

Polynomial poly(Characteristic p, std::vector<long long> c)
{
    return Polynomial::from_ints(p, c);
}

RationalFunction rat(Characteristic p, std::vector<long long> n, std::vector<long long> d)
{
    return RationalFunction(poly(p, std::move(n)), poly(p, std::move(d)));
}

} // namespace

TEST_CASE("scalars over Q and F_p")
{
    CHECK(Scalar::parse(0, "-6/8").to_string() == "-3/4");
    CHECK(Scalar::parse(7, "1/3") * Scalar::from_int(7, 3) == Scalar::one(7));
    CHECK(Scalar::from_int(5, -1).residue() == 4);
    CHECK(Scalar::from_int(0, 2).pow(10) == Scalar::from_int(0, 1024));
    CHECK_THROWS_AS(Scalar::zero(5).inverse(), Error);
    CHECK_THROWS_AS(check_characteristic(9), Error);
    try {
        (void)(Scalar::one(2) + Scalar::one(3));
        FAIL("mixed characteristics accepted");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::characteristic_mismatch);
    }
}

TEST_CASE("generalized binomials")
{
    CHECK(binomial(0, 5, 2) == Scalar::from_int(0, 10));
    CHECK(binomial(0, -3, 2) == Scalar::from_int(0, 6));
    CHECK(binomial(0, 2, 5).is_zero());
    CHECK(lucas_binomial(6, 2, 5) == 0);
    CHECK(lucas_binomial(3, 1, 2) == 1);
}

TEST_CASE("polynomial Hasse derivatives")
{
    CHECK(Polynomial::monomial(Scalar::one(0), 5).hasse(2) == Polynomial::monomial(Scalar::from_int(0, 10), 3));
    CHECK(poly(2, {0, 0, 0, 1, 1}).hasse(1) == poly(2, {0, 0, 1}));
    const Polynomial f = poly(3, {1, 2, 0, 1});
    CHECK(f.hasse(0) == f);
}

TEST_CASE("valuations")
{
    const auto p = 0;
    CHECK(RationalFunction(poly(p, {0, 0, 0, 1, -1})).valuation(Point::from_int(p, 0)) == 3);
    CHECK(rat(p, {0, 0, 0, 0, 1}, {1, 0, -1}).valuation(Point::infinity(p)) == -2);
    CHECK(RationalFunction(poly(p, {-1, 1})).valuation(Point::from_int(p, 1)) == 1);
    CHECK(RationalFunction(p).valuation(Point::from_int(p, 4)) == infinite_valuation);
}

TEST_CASE("gcd and squarefree decomposition")
{
    const Polynomial a = poly(0, {-1, 1}).pow(2) * poly(0, {2, 1});
    CHECK(gcd(a, a.derivative()) == poly(0, {-1, 1}));
    const auto sf = squarefree_decomposition(a);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0] == std::make_pair(poly(0, {2, 1}), 1));
    CHECK(sf[1] == std::make_pair(poly(0, {-1, 1}), 2));

    // t^3 + 1 = (t + 1)^3 over F_3 has zero derivative.
    const auto cube = squarefree_decomposition(poly(3, {1, 0, 0, 1}));
    REQUIRE(cube.size() == 1);
    CHECK(cube[0] == std::make_pair(poly(3, {1, 1}), 3));

    CHECK(prime_field_roots(poly(7, {-2, 0, 1})).size() == 2); // 3^2 = 9 = 2
    CHECK(prime_field_roots(poly(5, {-2, 0, 1})).empty());
}

TEST_CASE("rational function charts")
{
    const auto p = 0;
    const RationalFunction f = rat(p, {0, 0, 0, 0, 1}, {1, 0, -1});
    const RationalFunction g = f.reciprocal_substitution();
    // 1/s^4 / (1 - 1/s^2) = 1 / (s^4 - s^2)
    CHECK(g == rat(p, {1}, {0, 0, -1, 0, 1}));
    CHECK(f.shift(Scalar::one(p)).valuation(Point::from_int(p, 0)) == f.valuation(Point::from_int(p, 1)));
}

TEST_CASE("rational Hasse derivatives agree with series differentiation")
{
    const auto p = 0;
    const RationalFunction f = rat(p, {1, 0, 3, 1}, {1, -1, 0, 2});
    const int trunc = 12;
    const TruncatedSeries fs = expand(f, Point::from_int(p, 0), trunc + 5);
    const auto hs = hasse_derivatives(f, 4);
    for (std::size_t i = 0; i <= 4; ++i) {
        CHECK(expand(hs[i], Point::from_int(p, 0), trunc).agrees_with(fs.hasse(i)));
    }
}

TEST_CASE("series arithmetic and expansion")
{
    const auto p = 0;
    const TruncatedSeries geo = expand(rat(p, {1}, {1, -1}), Point::from_int(p, 0), 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(geo.coeff(i) == Scalar::one(p));
    }
    CHECK_THROWS_AS(geo.coeff(8), Error);

    const TruncatedSeries one_minus = TruncatedSeries::from_polynomial(poly(p, {1, -1}), 8);
    const TruncatedSeries prod = geo * one_minus;
    CHECK(prod.coeff(0) == Scalar::one(p));
    for (int i = 1; i < 8; ++i) {
        CHECK(prod.coeff(i).is_zero());
    }

    // t^4/(1 - t^2) in s = 1/t is -s^-2 - 1 - s^2 - ...
    const TruncatedSeries at_inf = expand(rat(p, {0, 0, 0, 0, 1}, {1, 0, -1}), Point::infinity(p), 4);
    CHECK(at_inf.valuation() == -2);
    CHECK(at_inf.coeff(-2) == Scalar::from_int(p, -1));
    CHECK(at_inf.coeff(-1).is_zero());
    CHECK(at_inf.coeff(0) == Scalar::from_int(p, -1));
    CHECK(at_inf.coeff(2) == Scalar::from_int(p, -1));

    // dt at infinity is -ds/s^2.
    const TruncatedSeries dt = expand_differential(RationalFunction::constant(Scalar::one(p)), Point::infinity(p), 3);
    CHECK(dt.valuation() == -2);
    CHECK(dt.coeff(-2) == Scalar::from_int(p, -1));

    const TruncatedSeries unit = TruncatedSeries::from_polynomial(poly(5, {0, 0, 2, 1}), 10);
    const TruncatedSeries inv = unit.inverse();
    CHECK(inv.valuation() == -2);
    CHECK(inv.truncation() == 6);
    const TruncatedSeries back = unit * inv;
    CHECK(back.coeff(0) == Scalar::one(5));
    CHECK(back.truncation() == 8);
}

TEST_CASE("scalar linear algebra")
{
    const auto p = 0;
    auto s = [&](long long v) { return Scalar::from_int(p, v); };
    ScalarMatrix m{{s(1), s(2), s(3)}, {s(2), s(4), s(6)}, {s(1), s(0), s(1)}};
    CHECK(rank(m) == 2);
    CHECK(determinant(m).is_zero());
    const auto ns = nullspace(m, 3, p);
    REQUIRE(ns.size() == 1);
    for (const auto &row : m) {
        Scalar acc = s(0);
        for (std::size_t j = 0; j < 3; ++j) {
            acc += row[j] * ns[0][j];
        }
        CHECK(acc.is_zero());
    }
    CHECK(determinant(ScalarMatrix{{s(2), s(1)}, {s(1), s(3)}}) == s(5));
    CHECK(solve(m, {s(1), s(2), s(0)}).has_value());
    CHECK_FALSE(solve(m, {s(1), s(3), s(0)}).has_value());
}

TEST_CASE("fraction-free rank and determinant")
{
    const auto one = Polynomial::constant(Scalar::one(0));
    const auto zero = Polynomial(0);
    const PolynomialMatrix id{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}};
    const RankDet r = fraction_free_rank_det(id);
    CHECK(r.rank == 3);
    CHECK(*r.det == RationalFunction(one));

    const auto p = 2;
    const PolynomialMatrix rows{{poly(p, {1}), poly(p, {0, 0, 0, 1}), poly(p, {0, 0, 0, 0, 1})},
                                {poly(p, {}), poly(p, {0, 0, 1}), poly(p, {})},
                                {poly(p, {}), poly(p, {}), poly(p, {1})}};
    CHECK(*fraction_free_rank_det(rows).det == RationalFunction(poly(p, {0, 0, 1})));

    const PolynomialMatrix prop{{poly(p, {}), poly(p, {0, 0, 1}), poly(p, {})}, {poly(p, {}), poly(p, {0, 1}), poly(p, {})}};
    const RankDet pr = fraction_free_rank_det(prop);
    CHECK(pr.rank == 1);
    CHECK_FALSE(pr.det.has_value());

    // Rational entries: det [[1/t, 1], [1, t]] = 0, det [[1/t, 0], [0, t^2]] = t.
    const RationalMatrix rm{{rat(0, {1}, {0, 1}), rat(0, {1}, {1})}, {rat(0, {1}, {1}), rat(0, {0, 1}, {1})}};
    CHECK(fraction_free_rank_det(rm).rank == 1);
    const RationalMatrix rd{{rat(0, {1}, {0, 1}), RationalFunction(0)}, {RationalFunction(0), rat(0, {0, 0, 1}, {1})}};
    CHECK(*fraction_free_rank_det(rd).det == rat(0, {0, 1}, {1}));

    const PolynomialMatrix ragged{{one, zero}, {one}};
    CHECK_THROWS_AS(fraction_free_rank_det(ragged), Error);
}

TEST_CASE("determinant valuation of truncated series")
{
    const auto ser = [](std::vector<long long> c, int t) {
        return TruncatedSeries::from_polynomial(Polynomial::from_ints(0, c), t);
    };
    // det [[1 + s, s], [s^2, s^3]] = s^3 + s^4 - s^3 = s^4
    const std::vector<std::vector<TruncatedSeries>> m{{ser({1, 1}, 10), ser({0, 1}, 10)},
                                                      {ser({0, 0, 1}, 10), ser({0, 0, 0, 1}, 10)}};
    CHECK(determinant_valuation(m) == 4);
    // det [[1, s], [s, s^2]] vanishes, which no truncation can confirm.
    const std::vector<std::vector<TruncatedSeries>> z{{ser({1}, 8), ser({0, 1}, 8)}, {ser({0, 1}, 8), ser({0, 0, 1}, 8)}};
    CHECK_FALSE(determinant_valuation(z).has_value());
    // Too little precision to see the s^4.
    const std::vector<std::vector<TruncatedSeries>> low{{ser({1, 1}, 3), ser({0, 1}, 3)},
                                                        {ser({0, 0, 1}, 3), ser({0, 0, 0, 1}, 4)}};
    CHECK_FALSE(determinant_valuation(low).has_value());
}

TEST_CASE("polynomial parsing")
{
    CHECK(Polynomial::parse(0, "t") == Polynomial::from_ints(0, {0, 1}));
    CHECK(Polynomial::parse(0, "-u") == Polynomial::from_ints(0, {0, -1}));
    CHECK(Polynomial::parse(0, "3 - 2t + t^4") == Polynomial::from_ints(0, {3, -2, 0, 0, 1}));
    CHECK(Polynomial::parse(0, "(t^2-1)") == Polynomial::from_ints(0, {-1, 0, 1}));
    CHECK(Polynomial::parse(0, "1/2*t^5").coeff(5) == Scalar::parse(0, "1/2"));
    CHECK(Polynomial::parse(5, "7t").coeff(1) == Scalar::from_int(5, 2));
    CHECK(Polynomial::parse(0, "0").is_zero());
    for (const auto &f : {Polynomial::from_ints(0, {0, 1}), Polynomial::from_ints(0, {-6, 0, 1}),
                          Polynomial::from_ints(0, {1, -3, 0, 2}), Polynomial::parse(0, "-1/3*t^2 + 5/7")}) {
        CHECK(Polynomial::parse(0, f.to_string()) == f);
        CHECK(Polynomial::parse(0, f.to_string("u")) == f);
    }
    CHECK_THROWS_AS(Polynomial::parse(0, "t + u"), Error);
    CHECK_THROWS_AS(Polynomial::parse(0, "t^"), Error);
    CHECK_THROWS_AS(Polynomial::parse(0, ""), Error);
}
