#pragma once

#include <optional>
#include <string>
#include <vector>

#include <weierforge/curve/local_ring.hpp>
#include <weierforge/exact/rational_function.hpp>
#include <weierforge/numsg/semigroup.hpp>
#include <weierforge/padic/padic.hpp>
#include <weierforge/wronski/wronski.hpp>

namespace weierforge::curve
{

using exact::Point;
using exact::Polynomial;
using exact::RationalFunction;
using padic::OrderSequence;

enum class SingularityKind { monomial, unibranch, two_branch };

std::string to_string(SingularityKind kind);

// A singular point of a rational curve: its local ring, written in the chart
// coordinates (t - a, or 1/t at infinity) of the points of P^1 over it.
class Singularity
{
public:
    // Requires S symmetric, so that the ring is Gorenstein.
    static Singularity monomial(const numsg::NumericalSemigroup &s, const Point &location);
    // O spanned by the given series modulo t^c k[[t]].
    static Singularity unibranch(std::vector<TruncatedSeries> basis, int conductor, const Point &location);
    static Singularity two_branch(LocalRing ring, const Point &first, const Point &second);

    SingularityKind kind() const noexcept
    {
        return kind_;
    }
    const std::vector<Point> &locations() const noexcept
    {
        return locations_;
    }
    const LocalRing &ring() const noexcept
    {
        return ring_;
    }
    int delta() const noexcept
    {
        return ring_.delta();
    }
    // Value semigroup of a unibranch singularity.
    const std::optional<numsg::NumericalSemigroup> &semigroup() const noexcept
    {
        return semigroup_;
    }
    std::string describe() const;

private:
    Singularity(SingularityKind kind, std::vector<Point> locations, LocalRing ring);

    SingularityKind kind_;
    std::vector<Point> locations_;
    LocalRing ring_;
    std::optional<numsg::NumericalSemigroup> semigroup_;
};

// P^1 with the listed singularities at pairwise disjoint points; the
// arithmetic genus is the sum of the deltas and must be positive.
class RationalCurve
{
public:
    RationalCurve(Characteristic p, std::vector<Singularity> singularities);

    Characteristic characteristic() const noexcept
    {
        return p_;
    }
    int genus() const noexcept
    {
        return genus_;
    }
    const std::vector<Singularity> &singularities() const noexcept
    {
        return sing_;
    }
    // Every point of P^1 lying over a singularity.
    std::vector<Point> branch_points() const;
    // Index of the singularity lying over q, if any.
    std::optional<std::size_t> singularity_at(const Point &q) const;

private:
    Characteristic p_;
    std::vector<Singularity> sing_;
    int genus_ = 0;
};

// tau_i = numerators[i] / denominator dt, i = 1..g.
struct DualizingBasis {
    Polynomial denominator;
    std::vector<Polynomial> numerators;
    // Per singularity: coefficients of a generator of omega_P in the basis.
    std::vector<std::vector<Scalar>> generators;
    // Per singularity: index of a basis element that generates, if one does.
    std::vector<std::optional<std::size_t>> generator_index;

    std::vector<RationalFunction> differentials() const;
    RationalFunction generator(std::size_t singularity) const;
};

// Differentials with poles bounded by the conductor exponents, cut out by
// sum over branches of Res(b tau) = 0 for every b in a basis of each O mod C.
// Throws SolutionDimensionMismatch unless the solution space has dimension g.
DualizingBasis dualizing_basis(const RationalCurve &x);

// Order sequence of the canonical system.
OrderSequence canonical_orders(const RationalCurve &x, const DualizingBasis &basis);

// 2 delta N + ord_P det(D^(eps_i) f_j) with f_j = tau_j / tau for the
// generator tau of omega_P. Throws GeneratorNotFound if the basis holds none.
long long singular_weight(const RationalCurve &x, std::size_t singularity, const DualizingBasis &basis);

struct PointWeight {
    std::size_t singularity = 0;
    std::vector<Point> locations;
    int delta = 0;
    long long weight = 0;
};

struct WeightReport {
    int genus = 0;
    Characteristic characteristic = 0;
    OrderSequence orders{{0}, 0};
    long long n = 0;
    std::vector<PointWeight> singular;
    wronski::WronskianDivisor smooth;
    long long total = 0;
    long long expected = 0;

    long long smooth_total() const
    {
        return smooth.total();
    }
};

// All Weierstrass weights of the canonical system. Each singular weight is
// computed from the global wronskian and checked against singular_weight
// when a generator is available; the total must equal (2g - 2)(g + N).
WeightReport weight_report(const RationalCurve &x);

// Weight at a rational point: a singular point's weight if q lies over one,
// otherwise the smooth weight at q.
long long point_weight(const RationalCurve &x, const Point &q);

// The curve with singularity i resolved. Throws if no singularity remains.
RationalCurve partial_normalization(const RationalCurve &x, std::size_t i);

} // namespace weierforge::curve
