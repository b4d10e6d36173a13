#include <weierforge/wronski/wronski.hpp>

#include <algorithm>

#include <weierforge/error.hpp>
#include <weierforge/exact/binomial.hpp>
#include <weierforge/exact/linalg.hpp>

namespace weierforge::wronski
{

using exact::PolynomialMatrix;
using exact::RationalMatrix;
using exact::Scalar;
using exact::ScalarMatrix;

namespace
{

int max_degree(const std::vector<Polynomial> &a)
{
    int d = 0;
    for (const auto &x : a) {
        d = std::max(d, x.degree());
    }
    return d;
}

ScalarMatrix coefficient_matrix(const std::vector<Polynomial> &a, Characteristic p)
{
    const int d = max_degree(a);
    ScalarMatrix m;
    for (const auto &x : a) {
        std::vector<Scalar> row;
        for (int i = 0; i <= d; ++i) {
            row.push_back(i <= x.degree() ? x.coeff(static_cast<std::size_t>(i)) : Scalar::zero(p));
        }
        m.push_back(std::move(row));
    }
    return m;
}

// The tuple in the chart coordinate at q, up to a common factor.
std::vector<Polynomial> chart_polynomials(const std::vector<Polynomial> &a, const Point &q)
{
    std::vector<Polynomial> b;
    if (q.is_infinite()) {
        const int d = max_degree(a);
        for (const auto &x : a) {
            b.push_back(x.reversed(static_cast<std::size_t>(d)));
        }
    } else {
        for (const auto &x : a) {
            b.push_back(x.shift(q.value()));
        }
    }
    return b;
}

std::vector<int> orders_at_origin(const std::vector<Polynomial> &b, Characteristic p)
{
    ScalarMatrix m = coefficient_matrix(b, p);
    const auto pivots = exact::rref(m);
    ensure(pivots.size() == b.size(), ErrorCode::internal, "local orders lost independence");
    std::vector<int> out;
    for (auto c : pivots) {
        out.push_back(static_cast<int>(c));
    }
    return out;
}

} // namespace

LinearSystem::LinearSystem(std::vector<RationalFunction> functions) : f_(std::move(functions))
{
    ensure(!f_.empty(), ErrorCode::invalid_argument, "a linear system needs at least one function");
    const auto p = f_.front().characteristic();
    den_ = Polynomial::constant(Scalar::one(p));
    for (const auto &f : f_) {
        ensure(f.characteristic() == p, ErrorCode::characteristic_mismatch, "functions of mixed characteristic");
        den_ = exact::lcm(den_, f.denominator());
    }
    for (const auto &f : f_) {
        a_.push_back(f.numerator() * den_.exact_div(f.denominator()));
    }
    ensure(exact::rank(coefficient_matrix(a_, p)) == a_.size(), ErrorCode::dependent_functions,
           "the functions are linearly dependent");
    orders_ = polynomial_order_sequence(a_);
}

OrderSequence polynomial_order_sequence(const std::vector<Polynomial> &a)
{
    ensure(!a.empty(), ErrorCode::invalid_argument, "empty tuple");
    const auto p = a.front().characteristic();
    const std::size_t s = a.size();
    const int cap = max_degree(a);
    PolynomialMatrix rows;
    std::vector<int> orders;
    for (int e = 0; e <= cap && orders.size() < s; ++e) {
        std::vector<Polynomial> row;
        for (const auto &x : a) {
            row.push_back(x.hasse(static_cast<std::size_t>(e)));
        }
        rows.push_back(std::move(row));
        if (exact::fraction_free_rank_det(rows).rank == rows.size()) {
            orders.push_back(e);
        } else {
            rows.pop_back();
        }
    }
    ensure(orders.size() == s, ErrorCode::internal, "order search exceeded the degree bound");
    return OrderSequence(std::move(orders), p);
}

OrderSequence order_sequence(const LinearSystem &v)
{
    return v.orders();
}

RationalFunction wronskian(const LinearSystem &v, const OrderSequence &eps)
{
    ensure(eps.size() == v.size(), ErrorCode::size_mismatch, "order sequence length differs from the system size");
    RationalMatrix m;
    for (int e : eps.terms()) {
        std::vector<RationalFunction> row;
        for (const auto &f : v.functions()) {
            row.push_back(exact::hasse(f, static_cast<std::size_t>(e)));
        }
        m.push_back(std::move(row));
    }
    return *exact::fraction_free_rank_det(m).det;
}

Polynomial polynomial_wronskian(const std::vector<Polynomial> &a, const OrderSequence &eps)
{
    ensure(eps.size() == a.size(), ErrorCode::size_mismatch, "order sequence length differs from the tuple size");
    PolynomialMatrix m;
    for (int e : eps.terms()) {
        std::vector<Polynomial> row;
        for (const auto &x : a) {
            row.push_back(x.hasse(static_cast<std::size_t>(e)));
        }
        m.push_back(std::move(row));
    }
    return exact::fraction_free_rank_det(m).det->numerator();
}

std::vector<int> vq_orders(const LinearSystem &v, const Point &q)
{
    auto orders = orders_at_origin(chart_polynomials(v.cleared(), q), v.characteristic());
    const int base = orders.front();
    for (auto &o : orders) {
        o -= base;
    }
    return orders;
}

SmoothWeight smooth_weight(const LinearSystem &v, const Point &q, const std::vector<Point> &singular)
{
    for (const auto &s : singular) {
        ensure(s != q, ErrorCode::singular_point, "point " + q.to_string() + " is singular");
    }
    const auto p = v.characteristic();
    const auto b = chart_polynomials(v.cleared(), q);
    const auto local = orders_at_origin(b, p);
    const OrderSequence &eps = v.orders();
    const long long s = static_cast<long long>(v.size());

    SmoothWeight out;
    const Polynomial w = polynomial_wronskian(b, eps);
    out.weight = w.valuation() - s * local.front();
    ScalarMatrix c;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        out.lower_bound += (local[i] - local.front()) - eps[i];
        std::vector<Scalar> row;
        for (int e : local) {
            row.push_back(exact::binomial(p, e - local.front(), static_cast<std::uint64_t>(eps[i])));
        }
        c.push_back(std::move(row));
    }
    out.bound_is_exact = !exact::determinant(c).is_zero();
    ensure(out.weight >= out.lower_bound, ErrorCode::internal, "weight below the order bound");
    ensure(!out.bound_is_exact || out.weight == out.lower_bound, ErrorCode::internal,
           "weight differs from the order bound although the binomial determinant is nonzero");
    return out;
}

long long global_weight_total(long long s, long long deg_l, long long g, long long n)
{
    return s * deg_l + (2 * g - 2) * n;
}

std::string DivisorEntry::location() const
{
    if (!factor) {
        return "inf";
    }
    if (factor->degree() == 1) {
        return (-factor->coeff(0) / factor->lead()).to_string();
    }
    return factor->to_string();
}

long long WronskianDivisor::total() const
{
    long long t = 0;
    for (const auto &e : entries) {
        t += e.multiplicity * e.degree;
    }
    return t;
}

std::size_t WronskianDivisor::point_count() const
{
    std::size_t n = 0;
    for (const auto &e : entries) {
        n += static_cast<std::size_t>(e.degree);
    }
    return n;
}

WronskianDivisor zero_divisor(const Polynomial &f, long long weight_at_infinity)
{
    ensure(!f.is_zero(), ErrorCode::invalid_argument, "divisor of the zero polynomial");
    const auto p = f.characteristic();
    WronskianDivisor out;
    for (const auto &[g, m] : exact::squarefree_decomposition(f)) {
        Polynomial rest = g;
        if (p != 0 && p < 65536) {
            for (const auto &r : exact::prime_field_roots(g)) {
                const Polynomial lin = Polynomial::linear_root(r);
                out.entries.push_back({lin, m, 1});
                rest = rest.exact_div(lin);
            }
        }
        if (rest.degree() > 0) {
            out.entries.push_back({rest, m, rest.degree()});
        }
    }
    if (weight_at_infinity > 0) {
        out.entries.push_back({std::nullopt, weight_at_infinity, 1});
    }
    return out;
}

Polynomial strip_points(Polynomial f, const std::vector<Point> &points)
{
    for (const auto &q : points) {
        if (q.is_infinite() || f.is_zero()) {
            continue;
        }
        const Polynomial lin = Polynomial::linear_root(q.value());
        for (int k = f.valuation_at(q.value()); k > 0; --k) {
            f = f.exact_div(lin);
        }
    }
    return f;
}

WronskianDivisor wronskian_divisor(const LinearSystem &v, const std::vector<Point> &excluded)
{
    const auto &a = v.cleared();
    Polynomial base = a.front();
    for (const auto &x : a) {
        base = exact::gcd(base, x);
    }
    Polynomial w = polynomial_wronskian(a, v.orders()).exact_div(base.pow(v.size()));
    w = strip_points(std::move(w), excluded);
    const Point inf = Point::infinity(v.characteristic());
    long long w_inf = 0;
    if (std::find(excluded.begin(), excluded.end(), inf) == excluded.end()) {
        w_inf = smooth_weight(v, inf).weight;
    }
    return zero_divisor(w, w_inf);
}

} // namespace weierforge::wronski
