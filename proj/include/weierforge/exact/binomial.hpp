#pragma once

#include <cstdint>

#include <gmpxx.h>

#include <weierforge/exact/scalar.hpp>

namespace weierforge::exact
{

// C(n, k) mod p by the base-p digit product. The caller guarantees p prime.
std::uint64_t lucas_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t p);

// Exact C(n, k) over Z; 0 when k > n.
mpz_class integer_binomial(std::uint64_t n, std::uint64_t k);

// The generalized binomial C(n, k) for any integer n as a field element,
// using C(-m, k) = (-1)^k C(m + k - 1, k) for negative n.
Scalar binomial(Characteristic p, long long n, std::uint64_t k);

} // namespace weierforge::exact
