#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include <weierforge/exact/scalar.hpp>

namespace weierforge::padic
{

using exact::Characteristic;

// 0 = eps_0 < eps_1 < ... < eps_{s-1}. In characteristic p the terms are
// closed under taking p-adically smaller integers; construction checks both.
class OrderSequence
{
public:
    OrderSequence(std::vector<int> terms, Characteristic p);

    const std::vector<int> &terms() const noexcept
    {
        return terms_;
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    int operator[](std::size_t i) const
    {
        return terms_[i];
    }
    Characteristic characteristic() const noexcept
    {
        return p_;
    }
    // N, the sum of the terms.
    long long sum() const;
    // True when the sequence is 0, 1, ..., s-1.
    bool is_classical() const;
    std::string to_string() const;

    friend bool operator==(const OrderSequence &a, const OrderSequence &b)
    {
        return a.terms_ == b.terms_ && a.p_ == b.p_;
    }

private:
    std::vector<int> terms_;
    Characteristic p_;
};

// C(n, k) mod p; throws NotPrime if p is not prime.
std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

// Every base-p digit of mu is at most the matching digit of eps.
bool p_adically_smaller(long long mu, long long eps, std::uint64_t p);

// Every mu p-adically smaller than a term is itself a term.
bool satisfies_p_adic_criterion(const std::vector<int> &seq, std::uint64_t p);

// The lexicographically least eps_0 < ... < eps_n with det C(a_j, eps_i)
// nonzero in the field of characteristic p: the orders of
// t -> (t^a_0 : ... : t^a_n) at a general point.
OrderSequence monomial_order_sequence(std::vector<int> exponents, Characteristic p);

// prod over i > j of (l_i - l_j) / (i - j), which is always an integer.
mpz_class gap_vandermonde_ratio(const std::vector<int> &gaps);

// A prime not dividing gap_vandermonde_ratio(gaps) certifies that the gap
// sequence l_1, ..., l_g is realized classically.
bool classicality_product_test(const std::vector<int> &gaps, std::uint64_t p);

// l_1 - 1, ..., l_g - 1 satisfies the p-adic criterion.
bool uses_all_weight(const std::vector<int> &gaps, std::uint64_t p);

} // namespace weierforge::padic
