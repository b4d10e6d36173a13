#pragma once

#include <utility>
#include <vector>

#include <weierforge/curve/curve.hpp>
#include <weierforge/valsg2/value_semigroup.hpp>

namespace weierforge::valsg2
{

using curve::RationalCurve;
using exact::RationalFunction;

enum class AdaptedRole {
    maximal,     // values a maximal point of S
    top_edge,    // nu_1 = r < xi_1, nu_2 >= xi_2: regular at the second branch point
    right_edge,  // nu_1 >= xi_1, nu_2 = s < xi_2: regular at the first branch point
    regular,     // regular at both branch points
};

struct AdaptedElement {
    RationalFunction differential;  // r with tau = r dt
    AdaptedRole role;
    // (nu_1, nu_2) of tau / generator, each capped at the conductor.
    ValuePoint value;
};

struct AdaptedBasis {
    std::size_t singularity = 0;
    std::vector<AdaptedElement> elements;

    std::vector<RationalFunction> with_role(AdaptedRole role) const;
};

// Dualizing differentials whose values at the two-branch singularity hit
// every maximal point and every edge point of S, by elimination on the
// value pairs. Throws GeneratorNotFound when no generator of omega_P is
// known and EliminationStuck when the values cannot be reached.
AdaptedBasis adapted_basis(const RationalCurve &x, std::size_t singularity);

// From the semigroup: delta(g-1)(g+1) - I(g-1) - wt(S_1) - wt(S_2) + w_v1 + w_v2.
long long two_branch_weight(const ValueSemigroup2 &s, int genus, long long w_v1, long long w_v2);
// The same for an ordinary node: (g - 1) g + w_1 + w_2.
long long node_weight(int genus, long long w_1, long long w_2);
// Smooth weight on a rational curve whose only singularity is P, not overweight.
long long two_branch_smooth_count(const ValueSemigroup2 &s, int genus);

// For a rational curve whose only singularity is the two-branch point:
// weights at the first and second branch points of the systems spanned by
// the right-edge and by the top-edge differentials.
std::pair<long long, long long> v_systems_weights(const RationalCurve &x);

} // namespace weierforge::valsg2
