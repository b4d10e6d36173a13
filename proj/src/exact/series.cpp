#include <weierforge/exact/series.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include <weierforge/error.hpp>
#include <weierforge/exact/binomial.hpp>

namespace weierforge::exact
{

TruncatedSeries::TruncatedSeries(Characteristic p, int truncation) : p_(p), offset_(truncation), truncation_(truncation)
{
}

TruncatedSeries::TruncatedSeries(Characteristic p, int offset, std::vector<Scalar> coefficients, int truncation)
    : p_(p), offset_(std::min(offset, truncation)), truncation_(truncation), c_(std::move(coefficients))
{
    ensure(offset <= truncation || c_.empty(), ErrorCode::invalid_argument, "series offset beyond truncation");
    ensure(static_cast<int>(c_.size()) <= truncation_ - offset_, ErrorCode::truncation_exceeded,
           "series coefficients past the truncation order");
    c_.resize(static_cast<std::size_t>(truncation_ - offset_), Scalar::zero(p_));
}

TruncatedSeries TruncatedSeries::from_terms(Characteristic p, const std::vector<std::pair<int, Scalar>> &terms,
                                            int truncation)
{
    int lo = truncation;
    for (const auto &[e, c] : terms) {
        if (e < truncation && !c.is_zero()) {
            lo = std::min(lo, e);
        }
    }
    std::vector<Scalar> v(static_cast<std::size_t>(truncation - lo), Scalar::zero(p));
    for (const auto &[e, c] : terms) {
        if (e < truncation && !c.is_zero()) {
            v[static_cast<std::size_t>(e - lo)] += c;
        }
    }
    return TruncatedSeries(p, lo, std::move(v), truncation);
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial &f, int truncation)
{
    std::vector<std::pair<int, Scalar>> terms;
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
        terms.emplace_back(static_cast<int>(i), f.coefficients()[i]);
    }
    return from_terms(f.characteristic(), terms, truncation);
}

Scalar TruncatedSeries::coeff(int exponent) const
{
    if (exponent >= truncation_) {
        fail(ErrorCode::truncation_exceeded, "coefficient s^" + std::to_string(exponent)
                                                 + " read past truncation " + std::to_string(truncation_));
    }
    if (exponent < offset_) {
        return Scalar::zero(p_);
    }
    return c_[static_cast<std::size_t>(exponent - offset_)];
}

int TruncatedSeries::valuation() const
{
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) {
            return offset_ + static_cast<int>(i);
        }
    }
    return infinite_valuation;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r = *this;
    for (auto &c : r.c_) {
        c = -c;
    }
    return r;
}

namespace
{

TruncatedSeries combine(const TruncatedSeries &a, const TruncatedSeries &b, bool subtract)
{
    ensure(a.characteristic() == b.characteristic(), ErrorCode::characteristic_mismatch, "series characteristics differ");
    const int t = std::min(a.truncation(), b.truncation());
    const int lo = std::min({a.offset(), b.offset(), t});
    std::vector<Scalar> v;
    v.reserve(static_cast<std::size_t>(t - lo));
    for (int k = lo; k < t; ++k) {
        v.push_back(subtract ? a.coeff(k) - b.coeff(k) : a.coeff(k) + b.coeff(k));
    }
    return TruncatedSeries(a.characteristic(), lo, std::move(v), t);
}

} // namespace

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return combine(a, b, false);
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
{
    return combine(a, b, true);
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    ensure(a.p_ == b.p_, ErrorCode::characteristic_mismatch, "series characteristics differ");
    const int va0 = a.valuation();
    const int vb0 = b.valuation();
    const int va = va0 == infinite_valuation ? a.truncation_ : va0;
    const int vb = vb0 == infinite_valuation ? b.truncation_ : vb0;
    const int t = std::min(a.truncation_ + vb, b.truncation_ + va);
    const int lo = std::min(va + vb, t);
    std::vector<Scalar> v(static_cast<std::size_t>(t - lo), Scalar::zero(a.p_));
    if (va0 != infinite_valuation && vb0 != infinite_valuation) {
        for (int k = lo; k < t; ++k) {
            Scalar acc = Scalar::zero(a.p_);
            for (int i = va; k - i >= vb; ++i) {
                const Scalar &x = a.c_[static_cast<std::size_t>(i - a.offset_)];
                if (x.is_zero()) {
                    continue;
                }
                acc += x * b.c_[static_cast<std::size_t>(k - i - b.offset_)];
            }
            v[static_cast<std::size_t>(k - lo)] = acc;
        }
    }
    return TruncatedSeries(a.p_, lo, std::move(v), t);
}

TruncatedSeries operator*(const Scalar &c, const TruncatedSeries &a)
{
    TruncatedSeries r = a;
    for (auto &x : r.c_) {
        x *= c;
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncated(int truncation) const
{
    ensure(truncation <= truncation_, ErrorCode::truncation_exceeded, "cannot extend a truncated series");
    const int lo = std::min(offset_, truncation);
    std::vector<Scalar> v;
    for (int k = lo; k < truncation; ++k) {
        v.push_back(coeff(k));
    }
    return TruncatedSeries(p_, lo, std::move(v), truncation);
}

TruncatedSeries TruncatedSeries::shifted(int k) const
{
    TruncatedSeries r = *this;
    r.offset_ += k;
    r.truncation_ += k;
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const
{
    const int v = valuation();
    ensure(v != infinite_valuation, ErrorCode::truncation_exceeded, "inverse of a series with unknown leading term");
    const int n = truncation_ - v;
    const Scalar inv0 = coeff(v).inverse();
    std::vector<Scalar> b;
    b.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        if (k == 0) {
            b.push_back(inv0);
            continue;
        }
        Scalar acc = Scalar::zero(p_);
        for (int j = 1; j <= k; ++j) {
            acc += coeff(v + j) * b[static_cast<std::size_t>(k - j)];
        }
        b.push_back(-(acc * inv0));
    }
    return TruncatedSeries(p_, -v, std::move(b), n - v);
}

TruncatedSeries TruncatedSeries::hasse(std::size_t order) const
{
    const int i = static_cast<int>(order);
    std::vector<Scalar> v;
    v.reserve(c_.size());
    for (int k = offset_; k < truncation_; ++k) {
        const Scalar &x = c_[static_cast<std::size_t>(k - offset_)];
        v.push_back(x.is_zero() ? x : binomial(p_, k, order) * x);
    }
    return TruncatedSeries(p_, offset_ - i, std::move(v), truncation_ - i);
}

std::vector<Scalar> TruncatedSeries::dense(int from, int to) const
{
    std::vector<Scalar> v;
    for (int k = from; k < to; ++k) {
        v.push_back(coeff(k));
    }
    return v;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries &other) const
{
    const int t = std::min(truncation_, other.truncation_);
    const int lo = std::min(offset_, other.offset_);
    for (int k = lo; k < t; ++k) {
        if (coeff(k) != other.coeff(k)) {
            return false;
        }
    }
    return true;
}

std::string TruncatedSeries::to_string(const std::string &var) const
{
    std::ostringstream os;
    bool first = true;
    for (int k = offset_; k < truncation_; ++k) {
        const Scalar &x = c_[static_cast<std::size_t>(k - offset_)];
        if (x.is_zero()) {
            continue;
        }
        os << (first ? "" : " + ") << x.to_string();
        if (k != 0) {
            os << '*' << var << '^' << k;
        }
        first = false;
    }
    if (first) {
        os << '0';
    }
    os << " + O(" << var << '^' << truncation_ << ')';
    return os.str();
}

RationalFunction to_chart(const RationalFunction &f, const Point &point)
{
    if (point.is_infinite()) {
        return f.reciprocal_substitution();
    }
    if (point.value().is_zero()) {
        return f;
    }
    return f.shift(point.value());
}

TruncatedSeries expand(const RationalFunction &f, const Point &point, int truncation)
{
    const auto p = f.characteristic();
    if (f.is_zero()) {
        return TruncatedSeries(p, truncation);
    }
    const RationalFunction g = to_chart(f, point);
    const Polynomial &num = g.numerator();
    const Polynomial &den = g.denominator();
    const int vn = num.valuation();
    const int vd = den.valuation();
    const int v = vn - vd;
    if (truncation <= v) {
        return TruncatedSeries(p, truncation);
    }
    const int n = truncation - v;
    // num / den = s^v * (num / s^vn) / (den / s^vd) with a unit denominator.
    std::vector<Scalar> nv;
    std::vector<Scalar> dv;
    for (int k = 0; k < n; ++k) {
        nv.push_back(num.coeff(static_cast<std::size_t>(vn + k)));
        dv.push_back(den.coeff(static_cast<std::size_t>(vd + k)));
    }
    const TruncatedSeries ns(p, 0, std::move(nv), n);
    const TruncatedSeries ds(p, 0, std::move(dv), n);
    return (ns * ds.inverse()).shifted(v);
}

TruncatedSeries expand_differential(const RationalFunction &r, const Point &point, int truncation)
{
    if (!point.is_infinite()) {
        return expand(r, point, truncation);
    }
    const auto p = r.characteristic();
    // -r(1/s) / s^2: expand r in 1/s to truncation + 2 and shift down.
    const TruncatedSeries e = expand(r, point, truncation + 2);
    return Scalar::from_int(p, -1) * e.shifted(-2);
}

std::optional<int> determinant_valuation(std::vector<std::vector<TruncatedSeries>> m)
{
    const std::size_t n = m.size();
    for (const auto &row : m) {
        ensure(row.size() == n, ErrorCode::ragged_matrix, "determinant of a non-square matrix");
    }
    int v = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = c;
        int best_v = infinite_valuation;
        for (std::size_t r = c; r < n; ++r) {
            const int rv = m[r][c].valuation();
            if (rv < best_v) {
                best = r;
                best_v = rv;
            }
        }
        if (best_v == infinite_valuation) {
            return std::nullopt;
        }
        std::swap(m[c], m[best]);
        v += best_v;
        const TruncatedSeries inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            const TruncatedSeries factor = m[r][c] * inv;
            for (std::size_t k = c; k < n; ++k) {
                m[r][k] = m[r][k] - factor * m[c][k];
            }
        }
    }
    return v;
}

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s)
{
    return os << s.to_string();
}

} // namespace weierforge::exact
