#pragma once

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <weierforge/exact/scalar.hpp>

namespace weierforge::exact
{

// Valuation reported for the zero function.
inline constexpr int infinite_valuation = std::numeric_limits<int>::max();

// Dense univariate polynomial over Q or F_p, coefficients indexed by degree.
// The coefficient vector never carries trailing zeros, so the zero
// polynomial has an empty vector and degree -1.
class Polynomial
{
public:
    explicit Polynomial(Characteristic p = 0) : p_(p) {}
    Polynomial(Characteristic p, std::vector<Scalar> coefficients);

    static Polynomial constant(const Scalar &c);
    static Polynomial monomial(const Scalar &c, std::size_t degree);
    // t - a
    static Polynomial linear_root(const Scalar &a);
    static Polynomial from_ints(Characteristic p, const std::vector<long long> &coefficients);
    // Sums of terms like "3", "-t^2", "1/2*t^5" or "2t" in one variable
    // (any single letter); the inverse of to_string.
    static Polynomial parse(Characteristic p, const std::string &text);

    Characteristic characteristic() const noexcept
    {
        return p_;
    }
    int degree() const noexcept
    {
        return static_cast<int>(c_.size()) - 1;
    }
    bool is_zero() const noexcept
    {
        return c_.empty();
    }
    bool is_one() const noexcept
    {
        return c_.size() == 1 && c_[0].is_one();
    }
    bool is_constant() const noexcept
    {
        return c_.size() <= 1;
    }
    // Zero beyond the degree.
    Scalar coeff(std::size_t i) const;
    const Scalar &lead() const;
    const std::vector<Scalar> &coefficients() const noexcept
    {
        return c_;
    }

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &other);
    Polynomial &operator-=(const Polynomial &other);
    Polynomial &operator*=(const Polynomial &other);
    Polynomial &operator*=(const Scalar &s);

    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Scalar &s)
    {
        return a *= s;
    }
    friend Polynomial operator*(const Scalar &s, Polynomial a)
    {
        return a *= s;
    }
    friend bool operator==(const Polynomial &a, const Polynomial &b);
    friend bool operator!=(const Polynomial &a, const Polynomial &b)
    {
        return !(a == b);
    }

    // Euclidean division; throws DivisionByZero for a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial &divisor) const;
    // Division that must be exact; a nonzero remainder is an internal error.
    Polynomial exact_div(const Polynomial &divisor) const;

    Polynomial monic() const;
    Scalar eval(const Scalar &x) const;
    Polynomial hasse(std::size_t order) const;
    Polynomial derivative() const
    {
        return hasse(1);
    }
    // p(t + a)
    Polynomial shift(const Scalar &a) const;
    // t^n p(1/t); requires n >= degree.
    Polynomial reversed(std::size_t n) const;
    // p(t)^(1/p) for a polynomial in t^p over F_p.
    Polynomial pth_root() const;
    Polynomial pow(std::size_t exponent) const;

    // Order of vanishing at t = a, or at t = 0 for the overload without
    // argument. Zero polynomials report infinite_valuation.
    int valuation() const noexcept;
    int valuation_at(const Scalar &a) const;

    std::string to_string(const std::string &var = "t") const;

private:
    void trim();

    Characteristic p_ = 0;
    std::vector<Scalar> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial &a, const Polynomial &b);
Polynomial lcm(const Polynomial &a, const Polynomial &b);

// Monic squarefree parts with multiplicities, f = lead * prod g_i^(m_i),
// sorted by multiplicity and then by the factors' coefficient strings.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial &f);

// Roots in the prime field found by direct search; only for small p.
std::vector<Scalar> prime_field_roots(const Polynomial &f);

std::ostream &operator<<(std::ostream &os, const Polynomial &p);

} // namespace weierforge::exact
