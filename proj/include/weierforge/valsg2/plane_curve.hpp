#pragma once

#include <random>

#include <weierforge/curve/local_ring.hpp>
#include <weierforge/exact/polynomial.hpp>

namespace weierforge::valsg2
{

// A branch of a plane curve through the origin, t -> (x(t), y(t)).
struct PlaneBranch {
    exact::Polynomial x;
    exact::Polynomial y;
};

// The image of k[[x, y]] in k[[t]] x k[[u]] for two branches: its
// conductor and a basis modulo the conductor. Throws InvalidArgument when
// the branches share a component or the conductor is not found by the
// largest truncation tried.
curve::LocalRing plane_two_branch_ring(const PlaneBranch &first, const PlaneBranch &second);

// A random plane two-branch ring with 1 <= delta <= max_delta; branches are
// smooth or have a single characteristic exponent pair (2, odd).
curve::LocalRing random_plane_two_branch_ring(std::mt19937_64 &rng, exact::Characteristic p, int max_delta);

} // namespace weierforge::valsg2
