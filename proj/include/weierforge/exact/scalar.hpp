#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace weierforge::exact
{

// 0 for the rationals, otherwise a prime p below 2^32.
using Characteristic = std::uint64_t;

bool is_prime(std::uint64_t n) noexcept;

// Throws NotPrime unless p == 0 or p is prime and fits the residue arithmetic.
void check_characteristic(Characteristic p);

// An exact element of Q (characteristic 0) or of F_p.
//
// Rationals are kept canonical by GMP: lowest terms, positive denominator.
// Residues are kept in [0, p). Binary operations require both operands to
// share a characteristic.
class Scalar
{
public:
    Scalar() = default;

    static Scalar zero(Characteristic p);
    static Scalar one(Characteristic p);
    static Scalar from_int(Characteristic p, long long value);
    static Scalar from_rational(Characteristic p, const mpq_class &value);
    // Accepts "17", "-3/4"; in characteristic p the denominator is inverted.
    static Scalar parse(Characteristic p, const std::string &text);

    Characteristic characteristic() const noexcept
    {
        return p_;
    }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    // Only meaningful in characteristic 0.
    const mpq_class &rational() const noexcept
    {
        return value_;
    }
    // Only meaningful in characteristic p.
    std::uint64_t residue() const noexcept
    {
        return residue_;
    }

    Scalar operator-() const;
    Scalar &operator+=(const Scalar &other);
    Scalar &operator-=(const Scalar &other);
    Scalar &operator*=(const Scalar &other);
    Scalar &operator/=(const Scalar &other);

    friend Scalar operator+(Scalar a, const Scalar &b)
    {
        return a += b;
    }
    friend Scalar operator-(Scalar a, const Scalar &b)
    {
        return a -= b;
    }
    friend Scalar operator*(Scalar a, const Scalar &b)
    {
        return a *= b;
    }
    friend Scalar operator/(Scalar a, const Scalar &b)
    {
        return a /= b;
    }

    Scalar inverse() const;
    Scalar pow(std::uint64_t exponent) const;

    friend bool operator==(const Scalar &a, const Scalar &b);
    friend bool operator!=(const Scalar &a, const Scalar &b)
    {
        return !(a == b);
    }

    std::string to_string() const;

private:
    void require_same(const Scalar &other) const;

    Characteristic p_ = 0;
    std::uint64_t residue_ = 0;
    mpq_class value_;
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace weierforge::exact
