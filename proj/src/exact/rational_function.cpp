#include <weierforge/exact/rational_function.hpp>

#include <ostream>

#include <weierforge/error.hpp>

namespace weierforge::exact
{

Point Point::parse(Characteristic p, const std::string &text)
{
    if (text == "inf" || text == "oo" || text == "infinity" || text == "∞") {
        return infinity(p);
    }
    return finite(Scalar::parse(p, text));
}

std::string Point::to_string() const
{
    return infinite_ ? "inf" : value_.to_string();
}

RationalFunction::RationalFunction(Characteristic p) : num_(p), den_(Polynomial::constant(Scalar::one(p))) {}

RationalFunction::RationalFunction(Polynomial numerator)
    : num_(std::move(numerator)), den_(Polynomial::constant(Scalar::one(num_.characteristic())))
{
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator))
{
    ensure(!den_.is_zero(), ErrorCode::division_by_zero, "rational function with zero denominator");
    ensure(num_.characteristic() == den_.characteristic(), ErrorCode::characteristic_mismatch,
           "numerator and denominator characteristics differ");
    normalize();
}

RationalFunction RationalFunction::monomial(const Scalar &c, int k)
{
    const auto p = c.characteristic();
    if (k >= 0) {
        return RationalFunction(Polynomial::monomial(c, static_cast<std::size_t>(k)));
    }
    return RationalFunction(Polynomial::constant(c), Polynomial::monomial(Scalar::one(p), static_cast<std::size_t>(-k)));
}

void RationalFunction::normalize()
{
    const auto p = num_.characteristic();
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Scalar::one(p));
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    const Scalar lc = den_.lead();
    if (!lc.is_one()) {
        const Scalar inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction &RationalFunction::operator+=(const RationalFunction &other)
{
    if (den_ == other.den_) {
        num_ += other.num_;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ = den_ * other.den_;
    }
    normalize();
    return *this;
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &other)
{
    return *this += -other;
}

RationalFunction &RationalFunction::operator*=(const RationalFunction &other)
{
    num_ *= other.num_;
    den_ *= other.den_;
    normalize();
    return *this;
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &other)
{
    ensure(!other.is_zero(), ErrorCode::division_by_zero, "rational function division by zero");
    num_ *= other.den_;
    den_ *= other.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::pow(int exponent) const
{
    if (exponent < 0) {
        ensure(!is_zero(), ErrorCode::division_by_zero, "negative power of zero");
        return RationalFunction(den_.pow(static_cast<std::size_t>(-exponent)),
                                num_.pow(static_cast<std::size_t>(-exponent)));
    }
    return RationalFunction(num_.pow(static_cast<std::size_t>(exponent)), den_.pow(static_cast<std::size_t>(exponent)));
}

int RationalFunction::valuation(const Point &point) const
{
    if (is_zero()) {
        return infinite_valuation;
    }
    if (point.is_infinite()) {
        return valuation_at_infinity();
    }
    return num_.valuation_at(point.value()) - den_.valuation_at(point.value());
}

int RationalFunction::valuation_at_infinity() const
{
    if (is_zero()) {
        return infinite_valuation;
    }
    return den_.degree() - num_.degree();
}

Scalar RationalFunction::eval(const Scalar &x) const
{
    const Scalar d = den_.eval(x);
    ensure(!d.is_zero(), ErrorCode::division_by_zero, "evaluation at a pole");
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::shift(const Scalar &a) const
{
    return RationalFunction(num_.shift(a), den_.shift(a));
}

RationalFunction RationalFunction::reciprocal_substitution() const
{
    if (is_zero()) {
        return *this;
    }
    // f(1/t) = t^(dd - dn) * rev(num) / rev(den)
    const int dn = num_.degree();
    const int dd = den_.degree();
    Polynomial n = num_.reversed(static_cast<std::size_t>(dn));
    Polynomial d = den_.reversed(static_cast<std::size_t>(dd));
    const auto p = characteristic();
    if (dd >= dn) {
        n *= Polynomial::monomial(Scalar::one(p), static_cast<std::size_t>(dd - dn));
    } else {
        d *= Polynomial::monomial(Scalar::one(p), static_cast<std::size_t>(dn - dd));
    }
    return RationalFunction(std::move(n), std::move(d));
}

std::string RationalFunction::to_string(const std::string &var) const
{
    if (den_.is_one()) {
        return num_.to_string(var);
    }
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::vector<RationalFunction> hasse_derivatives(const RationalFunction &f, std::size_t order)
{
    // D^(i)(A/B) = P_i / B^(i+1) with
    //   P_i = B^i D^(i)A - sum_{a<i} P_a D^(i-a)B B^(i-a-1),
    // which is the Leibniz rule D^(i)A = sum_a D^(a)(A/B) D^(i-a)B solved for
    // the top term.
    const Polynomial &a = f.numerator();
    const Polynomial &b = f.denominator();
    const auto p = f.characteristic();
    std::vector<Polynomial> b_pow{Polynomial::constant(Scalar::one(p))};
    for (std::size_t i = 1; i <= order + 1; ++i) {
        b_pow.push_back(b_pow.back() * b);
    }
    std::vector<Polynomial> hb;
    for (std::size_t i = 0; i <= order; ++i) {
        hb.push_back(b.hasse(i));
    }
    std::vector<Polynomial> numer;
    std::vector<RationalFunction> out;
    for (std::size_t i = 0; i <= order; ++i) {
        Polynomial pi = b_pow[i] * a.hasse(i);
        for (std::size_t k = 0; k < i; ++k) {
            if (hb[i - k].is_zero()) {
                continue;
            }
            pi -= numer[k] * hb[i - k] * b_pow[i - k - 1];
        }
        numer.push_back(pi);
        out.emplace_back(pi, b_pow[i + 1]);
    }
    return out;
}

RationalFunction hasse(const RationalFunction &f, std::size_t order)
{
    if (f.denominator().is_one()) {
        return RationalFunction(f.numerator().hasse(order));
    }
    return hasse_derivatives(f, order).back();
}

std::ostream &operator<<(std::ostream &os, const RationalFunction &f)
{
    return os << f.to_string();
}

} // namespace weierforge::exact
