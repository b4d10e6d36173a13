#include <weierforge/exact/scalar.hpp>

#include <ostream>

#include <weierforge/error.hpp>

namespace weierforge::exact
{

namespace
{

constexpr std::uint64_t max_prime_bound = 1ull << 32;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t reduce(const mpz_class &z, std::uint64_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

} // namespace

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

void check_characteristic(Characteristic p)
{
    if (p == 0) {
        return;
    }
    ensure(p < max_prime_bound && is_prime(p), ErrorCode::not_prime,
           "characteristic " + std::to_string(p) + " is not a supported prime");
}

Scalar Scalar::zero(Characteristic p)
{
    Scalar s;
    s.p_ = p;
    return s;
}

Scalar Scalar::one(Characteristic p)
{
    return from_int(p, 1);
}

Scalar Scalar::from_int(Characteristic p, long long value)
{
    Scalar s;
    s.p_ = p;
    if (p == 0) {
        s.value_ = mpz_class(std::to_string(value));
    } else {
        long long r = value % static_cast<long long>(p);
        if (r < 0) {
            r += static_cast<long long>(p);
        }
        s.residue_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_rational(Characteristic p, const mpq_class &value)
{
    Scalar s;
    s.p_ = p;
    if (p == 0) {
        s.value_ = value;
        s.value_.canonicalize();
        return s;
    }
    const std::uint64_t den = reduce(value.get_den(), p);
    ensure(den != 0, ErrorCode::division_by_zero, "denominator vanishes modulo " + std::to_string(p));
    Scalar n;
    n.p_ = p;
    n.residue_ = reduce(value.get_num(), p);
    Scalar d;
    d.p_ = p;
    d.residue_ = den;
    return n / d;
}

Scalar Scalar::parse(Characteristic p, const std::string &text)
{
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        fail(ErrorCode::parse_error, "cannot parse scalar '" + text + "'");
    }
    ensure(q.get_den() != 0, ErrorCode::division_by_zero, "zero denominator in '" + text + "'");
    q.canonicalize();
    return from_rational(p, q);
}

bool Scalar::is_zero() const noexcept
{
    return p_ == 0 ? sgn(value_) == 0 : residue_ == 0;
}

bool Scalar::is_one() const noexcept
{
    return p_ == 0 ? value_ == 1 : residue_ == 1;
}

void Scalar::require_same(const Scalar &other) const
{
    if (p_ != other.p_) {
        fail(ErrorCode::characteristic_mismatch, "scalars of characteristic " + std::to_string(p_) + " and "
                                                     + std::to_string(other.p_) + " combined");
    }
}

Scalar Scalar::operator-() const
{
    Scalar s = *this;
    if (p_ == 0) {
        s.value_ = -value_;
    } else if (residue_ != 0) {
        s.residue_ = p_ - residue_;
    }
    return s;
}

Scalar &Scalar::operator+=(const Scalar &other)
{
    require_same(other);
    if (p_ == 0) {
        value_ += other.value_;
    } else {
        residue_ += other.residue_;
        if (residue_ >= p_) {
            residue_ -= p_;
        }
    }
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &other)
{
    require_same(other);
    if (p_ == 0) {
        value_ -= other.value_;
    } else {
        residue_ = residue_ >= other.residue_ ? residue_ - other.residue_ : residue_ + p_ - other.residue_;
    }
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &other)
{
    require_same(other);
    if (p_ == 0) {
        value_ *= other.value_;
    } else {
        residue_ = mul_mod(residue_, other.residue_, p_);
    }
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &other)
{
    return *this *= other.inverse();
}

Scalar Scalar::inverse() const
{
    ensure(!is_zero(), ErrorCode::division_by_zero, "inverse of zero");
    if (p_ == 0) {
        Scalar s = *this;
        s.value_ = 1 / value_;
        return s;
    }
    // Fermat: a^(p-2).
    return pow(p_ - 2);
}

Scalar Scalar::pow(std::uint64_t exponent) const
{
    Scalar result = one(p_);
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= base;
        }
        base *= base;
        exponent >>= 1u;
    }
    return result;
}

bool operator==(const Scalar &a, const Scalar &b)
{
    a.require_same(b);
    return a.p_ == 0 ? a.value_ == b.value_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const
{
    return p_ == 0 ? value_.get_str() : std::to_string(residue_);
}

std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
    return os << s.to_string();
}

} // namespace weierforge::exact
