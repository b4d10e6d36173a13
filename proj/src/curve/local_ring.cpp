#include <weierforge/curve/local_ring.hpp>

#include <algorithm>
#include <numeric>

#include <weierforge/error.hpp>

namespace weierforge::curve
{

LocalRing::LocalRing(Characteristic p, std::vector<int> conductor, std::vector<BranchTuple> basis,
                     bool require_gorenstein)
    : p_(p), xi_(std::move(conductor)), basis_(std::move(basis))
{
    exact::check_characteristic(p);
    ensure(!xi_.empty(), ErrorCode::invalid_argument, "a local ring needs at least one branch");
    for (int x : xi_) {
        ensure(x >= 0, ErrorCode::invalid_argument, "negative conductor exponent");
    }
    ensure(!basis_.empty(), ErrorCode::invalid_argument, "empty basis");
    for (auto &b : basis_) {
        ensure(b.size() == xi_.size(), ErrorCode::size_mismatch, "basis element with the wrong number of branches");
        for (std::size_t i = 0; i < b.size(); ++i) {
            ensure(b[i].characteristic() == p, ErrorCode::characteristic_mismatch, "basis series characteristic");
            ensure(b[i].truncation() >= xi_[i], ErrorCode::truncation_exceeded,
                   "basis series known only below order " + std::to_string(b[i].truncation()));
            ensure(b[i].valuation() >= 0, ErrorCode::invalid_argument, "basis elements must be regular");
            b[i] = b[i].truncated(xi_[i]);
        }
    }

    for (const auto &b : basis_) {
        echelon_.push_back(reduce(b));
    }
    pivots_ = exact::rref(echelon_);
    ensure(pivots_.size() == basis_.size(), ErrorCode::invalid_argument, "basis is dependent modulo the conductor");
    echelon_.resize(pivots_.size());
    delta_ = conductor_sum() - static_cast<int>(basis_.size());

    BranchTuple unit;
    for (int x : xi_) {
        unit.push_back(TruncatedSeries::from_polynomial(exact::Polynomial::constant(Scalar::one(p)), x));
    }
    ensure(in_span(reduce(unit)), ErrorCode::not_closed, "the span does not contain 1");
    for (std::size_t a = 0; a < basis_.size(); ++a) {
        for (std::size_t b = a; b < basis_.size(); ++b) {
            BranchTuple prod;
            for (std::size_t i = 0; i < xi_.size(); ++i) {
                prod.push_back((basis_[a][i] * basis_[b][i]).truncated(xi_[i]));
            }
            ensure(in_span(reduce(prod)), ErrorCode::not_closed,
                   "product of basis elements " + std::to_string(a) + " and " + std::to_string(b)
                       + " leaves the span modulo the conductor");
        }
    }
    // t_i^(xi_i - 1) on branch i and 0 elsewhere must not lie in O.
    std::size_t offset = 0;
    for (std::size_t i = 0; i < xi_.size(); ++i) {
        if (xi_[i] > 0) {
            std::vector<Scalar> e(static_cast<std::size_t>(conductor_sum()), Scalar::zero(p));
            e[offset + static_cast<std::size_t>(xi_[i] - 1)] = Scalar::one(p);
            ensure(!in_span(e), ErrorCode::not_conductor,
                   "conductor exponent " + std::to_string(xi_[i]) + " on branch " + std::to_string(i + 1)
                       + " is not minimal");
        }
        offset += static_cast<std::size_t>(xi_[i]);
    }
    if (xi_.size() > 1) {
        for (int x : xi_) {
            ensure(x > 0, ErrorCode::not_conductor, "a ring with several branches has positive conductor exponents");
        }
    }
    if (require_gorenstein) {
        ensure(is_gorenstein(), ErrorCode::not_gorenstein,
               "dim of the normalization mod the conductor is " + std::to_string(conductor_sum()) + ", not 2 delta = "
                   + std::to_string(2 * delta_));
    }
}

LocalRing LocalRing::monomial(const numsg::NumericalSemigroup &s, Characteristic p)
{
    ensure(s.genus() > 0, ErrorCode::invalid_argument, "the semigroup N gives a smooth point");
    const int c = s.conductor();
    std::vector<BranchTuple> basis;
    for (int n : s.small_elements()) {
        basis.push_back({TruncatedSeries::from_terms(p, {{n, Scalar::one(p)}}, c)});
    }
    return LocalRing(p, {c}, std::move(basis), false);
}

int LocalRing::conductor_sum() const
{
    return std::accumulate(xi_.begin(), xi_.end(), 0);
}

std::vector<Scalar> LocalRing::reduce(const BranchTuple &f) const
{
    ensure(f.size() == xi_.size(), ErrorCode::size_mismatch, "element with the wrong number of branches");
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < xi_.size(); ++i) {
        for (int k = 0; k < xi_[i]; ++k) {
            v.push_back(f[i].coeff(k));
        }
    }
    return v;
}

bool LocalRing::in_span(const std::vector<Scalar> &v) const
{
    std::vector<Scalar> r = v;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const Scalar c = r[pivots_[k]];
        if (c.is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < r.size(); ++j) {
            r[j] -= c * echelon_[k][j];
        }
    }
    return std::all_of(r.begin(), r.end(), [](const Scalar &x) { return x.is_zero(); });
}

bool LocalRing::contains(const BranchTuple &f) const
{
    for (const auto &s : f) {
        const int v = s.valuation();
        if (v < 0) {
            return false;
        }
    }
    return in_span(reduce(f));
}

numsg::NumericalSemigroup LocalRing::value_semigroup() const
{
    ensure(xi_.size() == 1, ErrorCode::invalid_argument, "value semigroup of a ring with several branches");
    // The valuations of elements of O below c are the pivot columns of the
    // echelon form when columns are ordered by exponent.
    std::vector<bool> value(static_cast<std::size_t>(xi_[0]), false);
    for (auto c : pivots_) {
        value[c] = true;
    }
    std::vector<int> gaps;
    for (int n = 0; n < xi_[0]; ++n) {
        if (!value[static_cast<std::size_t>(n)]) {
            gaps.push_back(n);
        }
    }
    return numsg::NumericalSemigroup::from_gaps(std::move(gaps));
}

} // namespace weierforge::curve
