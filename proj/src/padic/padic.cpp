#include <weierforge/padic/padic.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <weierforge/error.hpp>
#include <weierforge/exact/binomial.hpp>
#include <weierforge/exact/linalg.hpp>

namespace weierforge::padic
{

using exact::Scalar;
using exact::ScalarMatrix;

OrderSequence::OrderSequence(std::vector<int> terms, Characteristic p) : terms_(std::move(terms)), p_(p)
{
    exact::check_characteristic(p);
    ensure(!terms_.empty() && terms_.front() == 0, ErrorCode::invalid_argument, "an order sequence starts at 0");
    ensure(std::adjacent_find(terms_.begin(), terms_.end(), std::greater_equal<>()) == terms_.end(),
           ErrorCode::invalid_argument, "order sequence not strictly increasing");
    if (p == 0) {
        ensure(terms_.back() == static_cast<int>(terms_.size()) - 1, ErrorCode::internal,
               "characteristic 0 orders must be 0, 1, ..., s-1");
    } else {
        ensure(satisfies_p_adic_criterion(terms_, p), ErrorCode::internal,
               "orders " + to_string() + " violate the p-adic criterion");
    }
}

long long OrderSequence::sum() const
{
    return std::accumulate(terms_.begin(), terms_.end(), 0LL);
}

bool OrderSequence::is_classical() const
{
    return terms_.back() == static_cast<int>(terms_.size()) - 1;
}

std::string OrderSequence::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        os << (i ? "," : "") << terms_[i];
    }
    return os.str();
}

std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p)
{
    ensure(p > 0 && exact::is_prime(p), ErrorCode::not_prime, std::to_string(p) + " is not prime");
    return exact::lucas_binomial(n, k, p);
}

bool p_adically_smaller(long long mu, long long eps, std::uint64_t p)
{
    ensure(p > 0 && exact::is_prime(p), ErrorCode::not_prime, std::to_string(p) + " is not prime");
    if (mu < 0 || eps < 0) {
        return false;
    }
    auto m = static_cast<std::uint64_t>(mu);
    auto e = static_cast<std::uint64_t>(eps);
    while (m > 0) {
        if (m % p > e % p) {
            return false;
        }
        m /= p;
        e /= p;
    }
    return true;
}

bool satisfies_p_adic_criterion(const std::vector<int> &seq, std::uint64_t p)
{
    const std::set<int> terms(seq.begin(), seq.end());
    for (int eps : terms) {
        for (int mu = 0; mu < eps; ++mu) {
            if (p_adically_smaller(mu, eps, p) && !terms.count(mu)) {
                return false;
            }
        }
    }
    return true;
}

OrderSequence monomial_order_sequence(std::vector<int> exponents, Characteristic p)
{
    exact::check_characteristic(p);
    ensure(!exponents.empty(), ErrorCode::invalid_argument, "no exponents");
    ensure(std::adjacent_find(exponents.begin(), exponents.end(), std::greater_equal<>()) == exponents.end(),
           ErrorCode::invalid_argument, "exponents must be strictly increasing");
    ensure(exponents.front() >= 0, ErrorCode::invalid_argument, "exponents must be nonnegative");
    const int a0 = exponents.front();
    for (auto &a : exponents) {
        a -= a0;
    }
    const std::size_t s = exponents.size();
    auto row = [&](int eps) {
        std::vector<Scalar> r;
        for (int a : exponents) {
            r.push_back(exact::binomial(p, a, static_cast<std::uint64_t>(eps)));
        }
        return r;
    };
    ScalarMatrix rows;
    std::vector<int> orders;
    // C(a_j, eps) vanishes for eps > a_n, so the search is bounded by a_n.
    for (int eps = 0; eps <= exponents.back() && orders.size() < s; ++eps) {
        rows.push_back(row(eps));
        if (exact::rank(rows) == rows.size()) {
            orders.push_back(eps);
        } else {
            rows.pop_back();
        }
    }
    ensure(orders.size() == s, ErrorCode::internal, "order search ran past the largest exponent");
    ensure(!exact::determinant(rows).is_zero(), ErrorCode::internal, "greedy orders give a singular binomial matrix");
    return OrderSequence(std::move(orders), p);
}

mpz_class gap_vandermonde_ratio(const std::vector<int> &gaps)
{
    mpz_class num = 1;
    mpz_class den = 1;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            num *= gaps[i] - gaps[j];
            den *= static_cast<unsigned long>(i - j);
        }
    }
    ensure(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0, ErrorCode::internal,
           "gap product is not an integer");
    return num / den;
}

bool classicality_product_test(const std::vector<int> &gaps, std::uint64_t p)
{
    ensure(p > 0 && exact::is_prime(p), ErrorCode::not_prime, std::to_string(p) + " is not prime");
    ensure(std::adjacent_find(gaps.begin(), gaps.end(), std::greater_equal<>()) == gaps.end(),
           ErrorCode::invalid_argument, "gaps must be strictly increasing");
    const mpz_class r = gap_vandermonde_ratio(gaps);
    return mpz_divisible_ui_p(r.get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

bool uses_all_weight(const std::vector<int> &gaps, std::uint64_t p)
{
    std::vector<int> shifted;
    for (int l : gaps) {
        shifted.push_back(l - 1);
    }
    return satisfies_p_adic_criterion(shifted, p);
}

} // namespace weierforge::padic
