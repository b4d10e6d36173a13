#pragma once

#include <optional>
#include <string>
#include <vector>

#include <weierforge/exact/polynomial.hpp>
#include <weierforge/exact/rational_function.hpp>
#include <weierforge/padic/padic.hpp>

namespace weierforge::wronski
{

using exact::Characteristic;
using exact::Point;
using exact::Polynomial;
using exact::RationalFunction;
using padic::OrderSequence;

// Independent rational functions f_1, ..., f_s on the projective line.
class LinearSystem
{
public:
    // Throws DependentFunctions unless the functions are independent.
    explicit LinearSystem(std::vector<RationalFunction> functions);

    const std::vector<RationalFunction> &functions() const noexcept
    {
        return f_;
    }
    std::size_t size() const noexcept
    {
        return f_.size();
    }
    Characteristic characteristic() const noexcept
    {
        return f_.front().characteristic();
    }
    // f_j times the lcm of the denominators.
    const std::vector<Polynomial> &cleared() const noexcept
    {
        return a_;
    }
    const Polynomial &common_denominator() const noexcept
    {
        return den_;
    }
    const OrderSequence &orders() const noexcept
    {
        return *orders_;
    }

private:
    std::vector<RationalFunction> f_;
    std::vector<Polynomial> a_;
    Polynomial den_;
    std::optional<OrderSequence> orders_;
};

// The orders of a tuple of independent polynomials: the least exponents
// whose Hasse derivative rows D^(e)(a_1, ..., a_s) are independent over k(t).
OrderSequence polynomial_order_sequence(const std::vector<Polynomial> &a);

OrderSequence order_sequence(const LinearSystem &v);

// det(D^(eps_i) f_j). Throws SizeMismatch if eps has the wrong length.
RationalFunction wronskian(const LinearSystem &v, const OrderSequence &eps);
Polynomial polynomial_wronskian(const std::vector<Polynomial> &a, const OrderSequence &eps);

// The orders at q of the elements of V, shifted so the first is 0.
std::vector<int> vq_orders(const LinearSystem &v, const Point &q);

struct SmoothWeight {
    long long weight = 0;
    // sum of eps_i(q) - eps_i
    long long lower_bound = 0;
    // det C(eps_j(q), eps_i) is nonzero, which forces weight == lower_bound.
    bool bound_is_exact = false;
};

// Weight of the wronskian section at q. Throws SingularPoint if q is listed
// in `singular`.
SmoothWeight smooth_weight(const LinearSystem &v, const Point &q, const std::vector<Point> &singular = {});

// s deg L + (2g - 2) N
long long global_weight_total(long long s, long long deg_l, long long g, long long n);

// A point, or the set of roots of an irreducible-over-the-prime-field (or,
// over Q, squarefree) factor, carrying the same weight.
struct DivisorEntry {
    // Empty for the point at infinity.
    std::optional<Polynomial> factor;
    long long multiplicity = 0;
    int degree = 1;

    bool at_infinity() const noexcept
    {
        return !factor.has_value();
    }
    std::string location() const;
};

struct WronskianDivisor {
    std::vector<DivisorEntry> entries;

    // sum of multiplicity * degree
    long long total() const;
    std::size_t point_count() const;
};

// Divisor of zeros of a polynomial on the affine line grouped by multiplicity,
// plus an entry for infinity when weight_at_infinity > 0. Over F_p with small
// p the linear factors are split off as single points.
WronskianDivisor zero_divisor(const Polynomial &f, long long weight_at_infinity);

// f with every factor t - a for the listed finite points removed.
Polynomial strip_points(Polynomial f, const std::vector<Point> &points);

// The divisor of the wronskian section of V away from the listed points.
WronskianDivisor wronskian_divisor(const LinearSystem &v, const std::vector<Point> &excluded = {});

} // namespace weierforge::wronski
