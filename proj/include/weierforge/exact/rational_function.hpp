#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <weierforge/exact/polynomial.hpp>
#include <weierforge/exact/scalar.hpp>

namespace weierforge::exact
{

// A point of the projective line: a field value or the point at infinity.
class Point
{
public:
    static Point finite(const Scalar &value)
    {
        return Point(false, value);
    }
    static Point infinity(Characteristic p)
    {
        return Point(true, Scalar::zero(p));
    }
    static Point from_int(Characteristic p, long long value)
    {
        return finite(Scalar::from_int(p, value));
    }
    // "inf" / "oo" / "∞" or a scalar literal.
    static Point parse(Characteristic p, const std::string &text);

    bool is_infinite() const noexcept
    {
        return infinite_;
    }
    const Scalar &value() const noexcept
    {
        return value_;
    }
    Characteristic characteristic() const noexcept
    {
        return value_.characteristic();
    }

    friend bool operator==(const Point &a, const Point &b)
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(const Point &a, const Point &b)
    {
        return !(a == b);
    }

    std::string to_string() const;

private:
    Point(bool infinite, Scalar value) : infinite_(infinite), value_(std::move(value)) {}

    bool infinite_;
    Scalar value_;
};

// Quotient of polynomials kept reduced with a monic denominator.
class RationalFunction
{
public:
    explicit RationalFunction(Characteristic p = 0);
    RationalFunction(Polynomial numerator);
    RationalFunction(Polynomial numerator, Polynomial denominator);

    static RationalFunction constant(const Scalar &c)
    {
        return RationalFunction(Polynomial::constant(c));
    }
    // c * t^k for any integer k.
    static RationalFunction monomial(const Scalar &c, int k);

    Characteristic characteristic() const noexcept
    {
        return num_.characteristic();
    }
    const Polynomial &numerator() const noexcept
    {
        return num_;
    }
    const Polynomial &denominator() const noexcept
    {
        return den_;
    }
    bool is_zero() const noexcept
    {
        return num_.is_zero();
    }
    bool is_constant() const noexcept
    {
        return num_.is_constant() && den_.is_constant();
    }

    RationalFunction operator-() const;
    RationalFunction &operator+=(const RationalFunction &other);
    RationalFunction &operator-=(const RationalFunction &other);
    RationalFunction &operator*=(const RationalFunction &other);
    RationalFunction &operator/=(const RationalFunction &other);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction &b)
    {
        return a += b;
    }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction &b)
    {
        return a -= b;
    }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction &b)
    {
        return a *= b;
    }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction &b)
    {
        return a /= b;
    }
    friend bool operator==(const RationalFunction &a, const RationalFunction &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction &a, const RationalFunction &b)
    {
        return !(a == b);
    }

    RationalFunction pow(int exponent) const;

    // Order at a point; negative for poles, infinite_valuation for zero.
    int valuation(const Point &point) const;
    int valuation_at_infinity() const;

    Scalar eval(const Scalar &x) const;
    // f(t + a)
    RationalFunction shift(const Scalar &a) const;
    // f(1/t)
    RationalFunction reciprocal_substitution() const;

    std::string to_string(const std::string &var = "t") const;

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

// All Hasse derivatives D^(0..order) of a rational function, sharing the
// intermediate quotient-rule terms.
std::vector<RationalFunction> hasse_derivatives(const RationalFunction &f, std::size_t order);
RationalFunction hasse(const RationalFunction &f, std::size_t order);

std::ostream &operator<<(std::ostream &os, const RationalFunction &f);

} // namespace weierforge::exact
