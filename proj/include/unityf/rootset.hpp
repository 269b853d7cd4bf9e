#pragma once

/**
 * @file rootset.hpp
 * @brief Power sums of root-of-unity sets: the exact phi/mu divisor formula
 *        for Galois-invariant sets encoded by divisor systems, filters in the
 *        divisor lattice, the E_p reduction, and an explicit-exponent
 *        representation with a cyclotomic brute-force oracle.
 *
 * A DivisorSystem (n, E) encodes U = union over d in E of the Galois orbits
 * {xi_n^i : gcd(i, n) = d}; the theorem states that all power sums a_c are
 * nonnegative (integers) iff E is a filter (e)_n = {d | n : e | d}, i.e. iff
 * U is the group of (n/e)-th roots of unity.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "unityf/cyclotomic.hpp"
#include "unityf/divlattice.hpp"
#include "unityf/errors.hpp"
#include "unityf/report.hpp"

namespace unityf {

/// Exhaustive check cap: 2^tau(n) - 1 systems must stay enumerable.
inline constexpr int kMaxDivisorCount = 16;
/// Cap for operations that iterate over all residues 0..n-1.
inline constexpr std::int64_t kMaxExplicitModulus = 100000;

/// A nonempty set of divisors of n, canonically sorted.
struct DivisorSystem {
    DivisorSystem(Modulus n, std::vector<std::int64_t> divisors_in_system);

    Modulus n;
    std::vector<std::int64_t> e;
};

/// The filter (e)_n = {d | n : e | d}.
struct DivisorFilter {
    DivisorFilter(Modulus n, std::int64_t e);

    Modulus n;
    std::int64_t e;

    DivisorSystem system() const;
};

/// A nonempty set of exponents i (mod n) representing U = {xi_n^i}.
struct ExplicitRootSet {
    ExplicitRootSet(Modulus n, std::vector<std::int64_t> exponents_mod_n);

    Modulus n;
    std::vector<std::int64_t> exponents;
};

/// a_c = sum_{d in E} phi(n/d) / phi(n/(n,dc)) * mu(n/(n,dc)), exact.
/// The phi-divisibility of each term is asserted at runtime.
std::int64_t power_sum(const DivisorSystem& sys, std::int64_t c);

/// n/e when (n/e) | c, else 0.
std::int64_t filter_power_sum_closed_form(const DivisorFilter& f, std::int64_t c);

/// The generator e = gcd(E) iff E equals the filter (e)_n.
std::optional<std::int64_t> is_divisor_filter(const DivisorSystem& sys);

/// E_p = {d/p : d in E, p | d} over modulus n/p. Throws EmptyReduction.
DivisorSystem reduce(const DivisorSystem& sys, std::int64_t p);

/// The explicit exponent set of the encoded U (iterates residues; capped).
ExplicitRootSet to_explicit(const DivisorSystem& sys);

/// a_k = sum_{i in U} xi_n^{ik} as an exact cyclotomic element.
CyclotomicElement power_sum_explicit(const ExplicitRootSet& u, std::int64_t k);

/// True iff the exponent set is closed under addition mod n (then a subgroup).
bool is_group_explicit(const ExplicitRootSet& u);

/// The divisor system whose orbits exactly tile U, if U is Galois-invariant.
std::optional<DivisorSystem> galois_orbit_decomposition(const ExplicitRootSet& u);

/**
 * Verify the roots theorem over every nonempty E subseteq D(n):
 * (a_c >= 0 for all c | n) iff E is a divisor filter. Exhaustive; requires
 * tau(n) <= max_divisors (default 16).
 */
CheckReport check_roots_theorem(Modulus n, int jobs = 1, int max_divisors = kMaxDivisorCount);

} // namespace unityf
