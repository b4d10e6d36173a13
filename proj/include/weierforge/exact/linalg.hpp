#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <weierforge/exact/polynomial.hpp>
#include <weierforge/exact/rational_function.hpp>
#include <weierforge/exact/scalar.hpp>

namespace weierforge::exact
{

using ScalarMatrix = std::vector<std::vector<Scalar>>;
using PolynomialMatrix = std::vector<std::vector<Polynomial>>;
using RationalMatrix = std::vector<std::vector<RationalFunction>>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(ScalarMatrix &m);
std::size_t rank(ScalarMatrix m);
Scalar determinant(ScalarMatrix m);

// Basis of {x : m x = 0}; `columns` is needed when m has no rows.
std::vector<std::vector<Scalar>> nullspace(ScalarMatrix m, std::size_t columns, Characteristic p);

// Some x with m x = b, if one exists.
std::optional<std::vector<Scalar>> solve(const ScalarMatrix &m, const std::vector<Scalar> &b);

struct RankDet {
    std::size_t rank = 0;
    // Present for square input only.
    std::optional<RationalFunction> det;
};

// Bareiss elimination over k[t]; every intermediate entry is a minor of the
// input, so the divisions are exact. Rationals are handled by clearing the
// denominators of each row first.
RankDet fraction_free_rank_det(const PolynomialMatrix &m);
RankDet fraction_free_rank_det(const RationalMatrix &m);

} // namespace weierforge::exact
