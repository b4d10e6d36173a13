#pragma once

#include <optional>
#include <vector>

#include <weierforge/exact/linalg.hpp>
#include <weierforge/exact/series.hpp>
#include <weierforge/numsg/semigroup.hpp>

namespace weierforge::curve
{

using exact::Characteristic;
using exact::Scalar;
using exact::TruncatedSeries;

// An element of k[[t_1]] x ... x k[[t_b]], one series per branch.
using BranchTuple = std::vector<TruncatedSeries>;

// A local ring O inside the product of the branch power series rings,
// presented by a basis of O modulo its conductor C = prod t_i^xi_i k[[t_i]].
//
// Construction checks that the span contains 1, is closed under
// multiplication mod C, and that C is exactly the conductor (no smaller
// exponent on any branch would still give an ideal inside O).
class LocalRing
{
public:
    LocalRing(Characteristic p, std::vector<int> conductor, std::vector<BranchTuple> basis,
              bool require_gorenstein = true);

    // k + k t^n_1 + ... + t^c k[[t]] for the elements n_i < c of S.
    static LocalRing monomial(const numsg::NumericalSemigroup &s, Characteristic p);

    Characteristic characteristic() const noexcept
    {
        return p_;
    }
    std::size_t branches() const noexcept
    {
        return xi_.size();
    }
    const std::vector<int> &conductor() const noexcept
    {
        return xi_;
    }
    const std::vector<BranchTuple> &basis() const noexcept
    {
        return basis_;
    }
    // dim of the normalization modulo O.
    int delta() const noexcept
    {
        return delta_;
    }
    // dim of the normalization modulo C equals 2 delta.
    bool is_gorenstein() const noexcept
    {
        return conductor_sum() == 2 * delta_;
    }
    int conductor_sum() const;

    // Coefficients of s^0 .. s^(xi_i - 1) on every branch, concatenated.
    std::vector<Scalar> reduce(const BranchTuple &f) const;
    // f is regular on every branch and lies in O.
    bool contains(const BranchTuple &f) const;

    // For one branch: the valuations of elements of O, as a numerical
    // semigroup (unibranch rings only).
    numsg::NumericalSemigroup value_semigroup() const;

private:
    bool in_span(const std::vector<Scalar> &v) const;

    Characteristic p_;
    std::vector<int> xi_;
    std::vector<BranchTuple> basis_;
    exact::ScalarMatrix echelon_;
    std::vector<std::size_t> pivots_;
    int delta_ = 0;
};

} // namespace weierforge::curve
