#include <weierforge/exact/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include <weierforge/error.hpp>
#include <weierforge/exact/binomial.hpp>

namespace weierforge::exact
{

Polynomial::Polynomial(Characteristic p, std::vector<Scalar> coefficients) : p_(p), c_(std::move(coefficients))
{
    for (const auto &c : c_) {
        ensure(c.characteristic() == p_, ErrorCode::characteristic_mismatch, "coefficient characteristic differs");
    }
    trim();
}

Polynomial Polynomial::constant(const Scalar &c)
{
    return Polynomial(c.characteristic(), {c});
}

Polynomial Polynomial::monomial(const Scalar &c, std::size_t degree)
{
    std::vector<Scalar> v(degree + 1, Scalar::zero(c.characteristic()));
    v[degree] = c;
    return Polynomial(c.characteristic(), std::move(v));
}

Polynomial Polynomial::linear_root(const Scalar &a)
{
    const auto p = a.characteristic();
    return Polynomial(p, {-a, Scalar::one(p)});
}

Polynomial Polynomial::from_ints(Characteristic p, const std::vector<long long> &coefficients)
{
    std::vector<Scalar> v;
    v.reserve(coefficients.size());
    for (long long c : coefficients) {
        v.push_back(Scalar::from_int(p, c));
    }
    return Polynomial(p, std::move(v));
}

Polynomial Polynomial::parse(Characteristic p, const std::string &text)
{
    std::string s;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t') {
            s += ch;
        }
    }
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
    }
    ensure(!s.empty(), ErrorCode::parse_error, "empty polynomial");
    char var = 0;
    Polynomial out(p);
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i + 1;
        while (j < s.size() && s[j] != '+' && s[j] != '-') {
            ++j;
        }
        std::string term = s.substr(i, j - i);
        i = j;
        bool negative = false;
        if (term[0] == '+' || term[0] == '-') {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        const auto letter = std::find_if(term.begin(), term.end(), [](char ch) { return std::isalpha(static_cast<unsigned char>(ch)); });
        std::string coeff(term.begin(), letter);
        std::size_t degree = 0;
        if (letter != term.end()) {
            ensure(var == 0 || var == *letter, ErrorCode::parse_error, "more than one variable in '" + text + "'");
            var = *letter;
            degree = 1;
            if (!coeff.empty() && coeff.back() == '*') {
                coeff.pop_back();
            }
            const std::string rest(letter + 1, term.end());
            if (!rest.empty()) {
                ensure(rest[0] == '^' && rest.size() > 1
                           && std::all_of(rest.begin() + 1, rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })
                           && rest.size() < 8,
                       ErrorCode::parse_error, "bad exponent in '" + text + "'");
                degree = std::stoul(rest.substr(1));
            }
        }
        ensure(!term.empty(), ErrorCode::parse_error, "empty term in '" + text + "'");
        Scalar c = coeff.empty() ? Scalar::one(p) : Scalar::parse(p, coeff);
        if (negative) {
            c = -c;
        }
        out += monomial(c, degree);
    }
    return out;
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Scalar Polynomial::coeff(std::size_t i) const
{
    return i < c_.size() ? c_[i] : Scalar::zero(p_);
}

const Scalar &Polynomial::lead() const
{
    ensure(!c_.empty(), ErrorCode::invalid_argument, "leading coefficient of the zero polynomial");
    return c_.back();
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto &c : r.c_) {
        c = -c;
    }
    return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &other)
{
    ensure(p_ == other.p_, ErrorCode::characteristic_mismatch, "polynomial characteristics differ");
    if (c_.size() < other.c_.size()) {
        c_.resize(other.c_.size(), Scalar::zero(p_));
    }
    for (std::size_t i = 0; i < other.c_.size(); ++i) {
        c_[i] += other.c_[i];
    }
    trim();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &other)
{
    ensure(p_ == other.p_, ErrorCode::characteristic_mismatch, "polynomial characteristics differ");
    if (c_.size() < other.c_.size()) {
        c_.resize(other.c_.size(), Scalar::zero(p_));
    }
    for (std::size_t i = 0; i < other.c_.size(); ++i) {
        c_[i] -= other.c_[i];
    }
    trim();
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    ensure(a.p_ == b.p_, ErrorCode::characteristic_mismatch, "polynomial characteristics differ");
    Polynomial r(a.p_);
    if (a.is_zero() || b.is_zero()) {
        return r;
    }
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Scalar::zero(a.p_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Polynomial &Polynomial::operator*=(const Polynomial &other)
{
    *this = *this * other;
    return *this;
}

Polynomial &Polynomial::operator*=(const Scalar &s)
{
    for (auto &c : c_) {
        c *= s;
    }
    trim();
    return *this;
}

bool operator==(const Polynomial &a, const Polynomial &b)
{
    if (a.p_ != b.p_ || a.c_.size() != b.c_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) {
            return false;
        }
    }
    return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial &divisor) const
{
    ensure(!divisor.is_zero(), ErrorCode::division_by_zero, "polynomial division by zero");
    ensure(p_ == divisor.p_, ErrorCode::characteristic_mismatch, "polynomial characteristics differ");
    Polynomial quotient(p_);
    Polynomial rem = *this;
    if (rem.degree() < divisor.degree()) {
        return {quotient, rem};
    }
    const std::size_t dd = static_cast<std::size_t>(divisor.degree());
    const Scalar inv = divisor.lead().inverse();
    quotient.c_.assign(rem.c_.size() - dd, Scalar::zero(p_));
    for (std::size_t k = rem.c_.size(); k-- > dd;) {
        const Scalar factor = rem.c_[k] * inv;
        if (factor.is_zero()) {
            continue;
        }
        quotient.c_[k - dd] = factor;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem.c_[k - dd + j] -= factor * divisor.c_[j];
        }
    }
    quotient.trim();
    rem.trim();
    return {quotient, rem};
}

Polynomial Polynomial::exact_div(const Polynomial &divisor) const
{
    auto [q, r] = divmod(divisor);
    ensure(r.is_zero(), ErrorCode::internal, "inexact polynomial division");
    return q;
}

Polynomial Polynomial::monic() const
{
    if (is_zero()) {
        return *this;
    }
    return *this * lead().inverse();
}

Scalar Polynomial::eval(const Scalar &x) const
{
    Scalar acc = Scalar::zero(p_);
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc = acc * x + c_[k];
    }
    return acc;
}

Polynomial Polynomial::hasse(std::size_t order) const
{
    if (order == 0) {
        return *this;
    }
    if (c_.size() <= order) {
        return Polynomial(p_);
    }
    std::vector<Scalar> v;
    v.reserve(c_.size() - order);
    for (std::size_t j = order; j < c_.size(); ++j) {
        v.push_back(c_[j].is_zero() ? c_[j] : binomial(p_, static_cast<long long>(j), order) * c_[j]);
    }
    return Polynomial(p_, std::move(v));
}

Polynomial Polynomial::shift(const Scalar &a) const
{
    // Horner in the shifted variable: p(t + a) = (...(c_n (t+a) + c_{n-1})(t+a) ...).
    const Polynomial lin(p_, {a, Scalar::one(p_)});
    Polynomial acc(p_);
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc = acc * lin + Polynomial::constant(c_[k]);
    }
    return acc;
}

Polynomial Polynomial::reversed(std::size_t n) const
{
    ensure(degree() <= static_cast<int>(n), ErrorCode::invalid_argument, "reversal length below degree");
    std::vector<Scalar> v(n + 1, Scalar::zero(p_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        v[n - i] = c_[i];
    }
    return Polynomial(p_, std::move(v));
}

Polynomial Polynomial::pth_root() const
{
    ensure(p_ != 0, ErrorCode::invalid_argument, "p-th root needs positive characteristic");
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i % p_ == 0) {
            // a^(1/p) = a in the prime field.
            v.push_back(c_[i]);
        } else {
            ensure(c_[i].is_zero(), ErrorCode::internal, "polynomial is not a p-th power");
        }
    }
    return Polynomial(p_, std::move(v));
}

Polynomial Polynomial::pow(std::size_t exponent) const
{
    Polynomial result = Polynomial::constant(Scalar::one(p_));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1u;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

int Polynomial::valuation() const noexcept
{
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i].is_zero()) {
            return static_cast<int>(i);
        }
    }
    return infinite_valuation;
}

int Polynomial::valuation_at(const Scalar &a) const
{
    if (a.is_zero()) {
        return valuation();
    }
    return shift(a).valuation();
}

std::string Polynomial::to_string(const std::string &var) const
{
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) {
            continue;
        }
        std::string coeff = c_[k].to_string();
        bool negative = p_ == 0 && coeff[0] == '-';
        if (negative) {
            coeff.erase(0, 1);
        }
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = coeff == "1";
        if (k == 0) {
            os << coeff;
            continue;
        }
        if (!unit) {
            os << coeff << '*';
        }
        os << var;
        if (k > 1) {
            os << '^' << k;
        }
    }
    return os.str();
}

Polynomial gcd(const Polynomial &a, const Polynomial &b)
{
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = x.divmod(y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

Polynomial lcm(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return Polynomial(a.characteristic());
    }
    return (a * b).exact_div(gcd(a, b)).monic();
}

namespace
{

void merge_factor(std::vector<std::pair<Polynomial, int>> &out, const Polynomial &factor, int multiplicity)
{
    if (factor.degree() <= 0) {
        return;
    }
    for (auto &[g, m] : out) {
        if (m == multiplicity) {
            g = (g * factor).monic();
            return;
        }
    }
    out.emplace_back(factor.monic(), multiplicity);
}

void squarefree_rec(const Polynomial &f, int scale, std::vector<std::pair<Polynomial, int>> &out)
{
    if (f.degree() <= 0) {
        return;
    }
    const auto p = f.characteristic();
    const Polynomial df = f.derivative();
    if (df.is_zero()) {
        // Only in characteristic p: f is a p-th power.
        squarefree_rec(f.pth_root(), scale * static_cast<int>(p), out);
        return;
    }
    Polynomial c = gcd(f, df);
    Polynomial w = f.exact_div(c).monic();
    int i = 1;
    while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial factor = w.exact_div(y);
        merge_factor(out, factor, i * scale);
        ++i;
        w = y;
        c = c.exact_div(y).monic();
    }
    if (c.degree() > 0) {
        // Remaining part is a p-th power (characteristic p only).
        ensure(p != 0, ErrorCode::internal, "squarefree decomposition left a residue in characteristic 0");
        squarefree_rec(c.pth_root(), scale * static_cast<int>(p), out);
    }
}

} // namespace

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial &f)
{
    std::vector<std::pair<Polynomial, int>> out;
    squarefree_rec(f.monic(), 1, out);
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        if (a.second != b.second) {
            return a.second < b.second;
        }
        return a.first.to_string() < b.first.to_string();
    });
    return out;
}

std::vector<Scalar> prime_field_roots(const Polynomial &f)
{
    const auto p = f.characteristic();
    ensure(p != 0, ErrorCode::invalid_argument, "root search needs a prime field");
    std::vector<Scalar> roots;
    if (f.is_zero()) {
        return roots;
    }
    for (std::uint64_t a = 0; a < p; ++a) {
        const Scalar x = Scalar::from_int(p, static_cast<long long>(a));
        if (f.eval(x).is_zero()) {
            roots.push_back(x);
        }
    }
    return roots;
}

std::ostream &operator<<(std::ostream &os, const Polynomial &p)
{
    return os << p.to_string();
}

} // namespace weierforge::exact
