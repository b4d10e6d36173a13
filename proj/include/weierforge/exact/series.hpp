#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <weierforge/exact/polynomial.hpp>
#include <weierforge/exact/rational_function.hpp>
#include <weierforge/exact/scalar.hpp>

namespace weierforge::exact
{

// sum_{offset <= i < truncation} c_i s^i, known exactly below the
// truncation order and unknown from there on. Reading a coefficient at or
// past the truncation throws TruncationExceeded.
class TruncatedSeries
{
public:
    explicit TruncatedSeries(Characteristic p = 0, int truncation = 0);
    TruncatedSeries(Characteristic p, int offset, std::vector<Scalar> coefficients, int truncation);

    static TruncatedSeries from_terms(Characteristic p, const std::vector<std::pair<int, Scalar>> &terms,
                                      int truncation);
    static TruncatedSeries from_polynomial(const Polynomial &f, int truncation);

    Characteristic characteristic() const noexcept
    {
        return p_;
    }
    int offset() const noexcept
    {
        return offset_;
    }
    int truncation() const noexcept
    {
        return truncation_;
    }
    Scalar coeff(int exponent) const;
    // First exponent with nonzero coefficient, or infinite_valuation when the
    // series vanishes up to its truncation.
    int valuation() const;
    bool is_zero() const
    {
        return valuation() == infinite_valuation;
    }

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(const Scalar &c, const TruncatedSeries &a);

    // Drops information at and beyond the given order.
    TruncatedSeries truncated(int truncation) const;
    // Multiplication by s^k.
    TruncatedSeries shifted(int k) const;
    // Series inverse of a series with a known nonzero leading term.
    TruncatedSeries inverse() const;
    TruncatedSeries hasse(std::size_t order) const;

    // Coefficients for exponents from..to-1.
    std::vector<Scalar> dense(int from, int to) const;

    // Exact equality of the known coefficients on the common range.
    bool agrees_with(const TruncatedSeries &other) const;

    std::string to_string(const std::string &var = "s") const;

private:
    Characteristic p_;
    int offset_;
    int truncation_;
    std::vector<Scalar> c_;
};

// Laurent expansion of f in the chart coordinate of the point: s = t - a for
// finite a, s = 1/t at infinity. Coefficients are exact below `truncation`.
TruncatedSeries expand(const RationalFunction &f, const Point &point, int truncation);

// Expansion of the coefficient of ds for the differential r(t) dt in the
// chart coordinate of the point (at infinity, r dt = -r(1/s) s^-2 ds).
TruncatedSeries expand_differential(const RationalFunction &r, const Point &point, int truncation);

// The rational function in the chart coordinate (f(s + a) or f(1/s)).
RationalFunction to_chart(const RationalFunction &f, const Point &point);

// Valuation of the determinant of a square matrix of series, or nullopt when
// the known coefficients do not determine it.
std::optional<int> determinant_valuation(std::vector<std::vector<TruncatedSeries>> m);

std::ostream &operator<<(std::ostream &os, const TruncatedSeries &s);

} // namespace weierforge::exact
