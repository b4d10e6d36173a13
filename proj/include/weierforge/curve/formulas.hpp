#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <weierforge/exact/series.hpp>
#include <weierforge/numsg/semigroup.hpp>
#include <weierforge/padic/padic.hpp>

namespace weierforge::curve
{

// Closed forms for curves whose singularities are monomial unibranch points.

struct MonomialCurveWeights {
    long long at_singularity = 0;
    long long at_infinity = 0;
    padic::OrderSequence orders{{0}, 0};
};

// One monomial singularity with semigroup S at 0 on P^1: the singular point
// and the point at infinity carry all the weight.
MonomialCurveWeights monomial_curve_weights(const numsg::NumericalSemigroup &s, exact::Characteristic p);

// Characteristic 0: weight of a monomial singularity of semigroup S on a curve
// of genus g, given the weight w_y of the point below it on the curve with
// that singularity resolved.
long long unibranch_weight(const numsg::NumericalSemigroup &s, int genus, long long w_y);

// Two monomial singularities placed so that, with chart coordinates t_1, t_2:
//   1  t_1 t_2 is constant (positions 0 and infinity),
//   2  the first point is the pole of t_2 only (positions infinity and 1),
//   3  neither point is the pole of the other coordinate (positions 0 and 1).
enum class TwoPointCase { reciprocal = 1, one_sided = 2, generic = 3 };

struct TwoMonomialWeights {
    long long first = 0;
    long long second = 0;
    long long smooth_count = 0;
};

TwoPointCase two_point_case_from_tag(int tag);

// Characteristic 0 only.
TwoMonomialWeights two_monomial_weights(const numsg::NumericalSemigroup &s1, const numsg::NumericalSemigroup &s2,
                                        TwoPointCase c);

// Same, with the case read off the chosen positions. The pair is ordered as
// given; if only the second point is a pole of the other chart coordinate the
// cross term lands on the second weight.
TwoMonomialWeights two_monomial_weights_at(const numsg::NumericalSemigroup &s1, const exact::Point &a1,
                                           const numsg::NumericalSemigroup &s2, const exact::Point &a2);

// Classifies a placement; nullopt when only the second point is a pole.
std::optional<TwoPointCase> two_point_case(const exact::Point &a1, const exact::Point &a2);

// Characteristic 0, unibranch singularities whose points below are not
// Weierstrass points of the normalization: number of smooth Weierstrass
// points counted with multiplicity.
long long unibranch_smooth_count(const std::vector<numsg::NumericalSemigroup> &semigroups);

} // namespace weierforge::curve
