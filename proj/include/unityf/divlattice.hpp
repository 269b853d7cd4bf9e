#pragma once

/**
 * @file divlattice.hpp
 * @brief Elementary arithmetic on the divisor lattice D(n): factorization,
 *        divisor enumeration, Euler phi, Moebius mu, p-adic valuation.
 *
 * All functions take positive 64-bit integers and compute exactly; moduli are
 * capped at kMaxModulus so that every downstream quantity (cyclic convolution
 * indices, phi/mu products, lcm of member orders) stays inside int64_t.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "unityf/errors.hpp"

namespace unityf {

/// Largest modulus the library accepts anywhere.
inline constexpr std::int64_t kMaxModulus = 1'000'000'000;

/// A validated positive modulus, 1 <= value <= kMaxModulus.
struct Modulus {
    explicit Modulus(std::int64_t n);
    std::int64_t value;
};

/// Prime factorization as (prime, exponent) pairs, primes ascending. n >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// All divisors of n, sorted ascending. n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime(std::int64_t n);

/// Euler's totient. phi(1) = 1.
std::int64_t euler_phi(std::int64_t n);

/// Moebius function: 0 on non-squarefree n, else (-1)^{#prime factors}.
int moebius(std::int64_t n);

/// Exponent of the prime p in n. Throws InvalidInput unless p is prime.
int valuation(std::int64_t n, std::int64_t p);

/// Number of divisors tau(n).
std::int64_t divisor_count(std::int64_t n);

/// Sum of divisors sigma(n). Checked against overflow.
std::int64_t divisor_sum(std::int64_t n);

/// gcd with gcd(0,0) = 0; arguments may be any nonnegative int64.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// lcm, overflow-checked. lcm(0, x) = 0.
std::int64_t lcm(std::int64_t a, std::int64_t b);

} // namespace unityf
