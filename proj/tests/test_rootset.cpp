#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "unityf/cyclotomic.hpp"
#include "unityf/divlattice.hpp"
#include "unityf/parallel.hpp"
#include "unityf/rootset.hpp"

using namespace unityf;

namespace {

/// All nonempty sub-systems of D(n) as divisor index masks.
std::vector<DivisorSystem> all_systems(std::int64_t n) {
    const auto divs = divisors(n);
    std::vector<DivisorSystem> out;
    for (std::uint32_t mask = 1; mask < (1u << divs.size()); ++mask) {
        std::vector<std::int64_t> members;
        for (std::size_t i = 0; i < divs.size(); ++i)
            if (mask >> i & 1u) members.push_back(divs[i]);
        out.emplace_back(Modulus(n), std::move(members));
    }
    return out;
}

} // namespace

TEST_CASE("power_sum: worked examples and domain errors") {
    CHECK(power_sum(DivisorSystem(Modulus(12), {3}), 1) == 0);
    CHECK(power_sum(DivisorSystem(Modulus(12), {4, 12}), 3) == 3);
    CHECK(power_sum(DivisorSystem(Modulus(12), {4, 12}), 2) == 0);
    CHECK_THROWS_AS(power_sum(DivisorSystem(Modulus(12), {4, 12}), 5), InvalidInput);
    CHECK_THROWS_AS(power_sum(DivisorSystem(Modulus(12), {4, 12}), 0), InvalidInput);
}

TEST_CASE("filter_power_sum_closed_form: worked examples") {
    // (1)_n at c = n gives n.
    for (std::int64_t n : {4, 12, 30})
        CHECK(filter_power_sum_closed_form(DivisorFilter(Modulus(n), 1), n) == n);
    // (n)_n is U = {1}: every power sum is 1.
    for (std::int64_t c : {1, 2, 3, 4, 6, 12})
        CHECK(filter_power_sum_closed_form(DivisorFilter(Modulus(12), 12), c) == 1);
    CHECK(filter_power_sum_closed_form(DivisorFilter(Modulus(12), 4), 6) == 3);
    CHECK(filter_power_sum_closed_form(DivisorFilter(Modulus(12), 4), 2) == 0);
}

TEST_CASE("is_divisor_filter: worked examples") {
    CHECK(is_divisor_filter(DivisorSystem(Modulus(12), {4, 12})) == 4);
    CHECK(is_divisor_filter(DivisorSystem(Modulus(12), {1, 2, 3, 4, 6, 12})) == 1);
    CHECK_FALSE(is_divisor_filter(DivisorSystem(Modulus(12), {4, 6, 12})).has_value());
}

TEST_CASE("reduce: worked examples") {
    const DivisorSystem r1 = reduce(DivisorSystem(Modulus(12), {4, 6, 12}), 2);
    CHECK(r1.n.value == 6);
    CHECK(r1.e == std::vector<std::int64_t>{2, 3, 6});
    const DivisorSystem r2 = reduce(DivisorSystem(Modulus(12), {4, 12}), 3);
    CHECK(r2.n.value == 4);
    CHECK(r2.e == std::vector<std::int64_t>{4});
    CHECK_THROWS_AS(reduce(DivisorSystem(Modulus(12), {3}), 2), EmptyReduction);
    CHECK_THROWS_AS(reduce(DivisorSystem(Modulus(12), {4, 12}), 5), InvalidInput);
}

TEST_CASE("check_roots_theorem: worked examples") {
    const CheckReport r12 = check_roots_theorem(Modulus(12));
    CHECK(r12.tested == 63);
    CHECK(r12.filters == 6);
    CHECK(r12.failed == 0);
    const CheckReport r7 = check_roots_theorem(Modulus(7));
    CHECK(r7.tested == 3);
    CHECK(r7.filters == 2);
    const CheckReport r60 = check_roots_theorem(Modulus(60));
    CHECK(r60.tested == 4095);
    CHECK(r60.filters == 12);
    CHECK(r60.failed == 0);
    // tau(180) = 18 exceeds the enumeration cap.
    CHECK_THROWS_AS(check_roots_theorem(Modulus(180)), CapExceeded);
}

TEST_CASE("power_sum_explicit: worked examples") {
    // All n-th roots sum to zero.
    std::vector<std::int64_t> all;
    for (std::int64_t i = 0; i < 12; ++i) all.push_back(i);
    CHECK(power_sum_explicit(ExplicitRootSet(Modulus(12), all), 1).is_zero());
    // U = {-1} in n = 12.
    CHECK(power_sum_explicit(ExplicitRootSet(Modulus(12), {6}), 1).as_integer() == -1);
    // U = {1, xi_3}: not a rational integer.
    CHECK_FALSE(power_sum_explicit(ExplicitRootSet(Modulus(12), {0, 4}), 1).as_integer().has_value());
    // Negative k is reduced mod n.
    CHECK(power_sum_explicit(ExplicitRootSet(Modulus(12), {6}), -1).as_integer() == -1);
}

TEST_CASE("is_group_explicit: worked examples") {
    CHECK(is_group_explicit(ExplicitRootSet(Modulus(12), {0})));
    CHECK(is_group_explicit(ExplicitRootSet(Modulus(12), {0, 6})));
    CHECK_FALSE(is_group_explicit(ExplicitRootSet(Modulus(12), {0, 4})));
}

TEST_CASE("galois_orbit_decomposition: worked examples") {
    const auto d1 = galois_orbit_decomposition(ExplicitRootSet(Modulus(12), {4, 8}));
    REQUIRE(d1.has_value());
    CHECK(d1->e == std::vector<std::int64_t>{4});
    const auto d2 = galois_orbit_decomposition(ExplicitRootSet(Modulus(12), {0, 3, 6, 9}));
    REQUIRE(d2.has_value());
    CHECK(d2->e == std::vector<std::int64_t>{3, 6, 12});
    CHECK_FALSE(galois_orbit_decomposition(ExplicitRootSet(Modulus(12), {0, 4})).has_value());
}

TEST_CASE("oracle equivalence: integer formula vs cyclotomic sums, n <= 36") {
    for (std::int64_t n = 1; n <= 36; ++n) {
        for (const DivisorSystem& sys : all_systems(n)) {
            const ExplicitRootSet u = to_explicit(sys);
            for (std::int64_t c : divisors(n)) {
                const auto oracle = power_sum_explicit(u, c).as_integer();
                REQUIRE(oracle.has_value());
                REQUIRE(power_sum(sys, c) == *oracle);
            }
        }
    }
}

TEST_CASE("filter closed form agrees with power_sum, n <= 360") {
    for (std::int64_t n = 1; n <= 360; ++n)
        for (std::int64_t e : divisors(n)) {
            const DivisorFilter f(Modulus(n), e);
            const DivisorSystem sys = f.system();
            for (std::int64_t c : divisors(n))
                REQUIRE(power_sum(sys, c) == filter_power_sum_closed_form(f, c));
        }
}

TEST_CASE("reduction recurrence in exact integers, n <= 60") {
    for (std::int64_t n = 2; n <= 60; ++n) {
        for (const DivisorSystem& sys : all_systems(n)) {
            for (const auto& [p, exp] : factorize(n)) {
                bool divides_some = false;
                for (std::int64_t d : sys.e) divides_some |= (d % p == 0);
                if (!divides_some) continue;
                const DivisorSystem red = reduce(sys, p);
                const std::int64_t np = n / p;
                for (std::int64_t c : divisors(np)) {
                    const std::int64_t acp = power_sum(red, c);
                    if ((np % (p * c)) == 0) {
                        REQUIRE(acp == power_sum(sys, c));
                    } else {
                        REQUIRE(p * acp == (p - 1) * power_sum(sys, c) + power_sum(sys, p * c));
                    }
                }
            }
        }
    }
}

TEST_CASE("modification lemmas, n <= 100") {
    for (std::int64_t n = 2; n <= 100; ++n) {
        const bool prime_power = factorize(n).size() == 1;
        const auto divs = divisors(n);
        if (prime_power) {
            const std::int64_t p = factorize(n)[0].first;
            // (p) + {1} is the full filter (1); (1) - {1} is the filter (p).
            std::vector<std::int64_t> plus_one{1};
            for (std::int64_t d : divs)
                if (d % p == 0) plus_one.push_back(d);
            const DivisorSystem a(Modulus(n), plus_one);
            CHECK(is_divisor_filter(a) == 1);
            std::vector<std::int64_t> minus_one(divs.begin() + 1, divs.end());
            const DivisorSystem b(Modulus(n), minus_one);
            CHECK(is_divisor_filter(b) == p);
            for (std::int64_t c : divs) {
                CHECK(power_sum(a, c) >= 0);
                CHECK(power_sum(b, c) >= 0);
            }
            continue;
        }
        // Non-prime-power: adding 1 to any filter (e) != (1) breaks nonnegativity.
        for (std::int64_t e : divs) {
            if (e == 1) continue;
            std::vector<std::int64_t> members{1};
            for (std::int64_t d : divs)
                if (d % e == 0) members.push_back(d);
            const DivisorSystem sys(Modulus(n), members);
            bool some_negative = false;
            for (std::int64_t c : divs) some_negative |= power_sum(sys, c) < 0;
            CHECK(some_negative);
        }
        // Removing 1 from (1) breaks nonnegativity.
        std::vector<std::int64_t> minus_one(divs.begin() + 1, divs.end());
        const DivisorSystem sys(Modulus(n), minus_one);
        bool some_negative = false;
        for (std::int64_t c : divs) some_negative |= power_sum(sys, c) < 0;
        CHECK(some_negative);
    }
}

TEST_CASE("roots theorem holds for all n <= 60 and {72, 96, 100, 120}") {
    std::vector<std::int64_t> ns;
    for (std::int64_t n = 1; n <= 60; ++n) ns.push_back(n);
    for (std::int64_t n : {72, 96, 100, 120}) ns.push_back(n);
    for (std::int64_t n : ns) {
        const CheckReport r = check_roots_theorem(Modulus(n));
        REQUIRE(r.failed == 0);
        REQUIRE(r.filters == static_cast<std::uint64_t>(divisor_count(n)));
        REQUIRE(r.tested == (std::uint64_t{1} << divisor_count(n)) - 1);
    }
}

TEST_CASE("explicit theorem bridge: nonneg integer power sums iff group") {
    // Exhaustive over all nonempty exponent sets for n <= 12; sampled above.
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<std::int64_t> exps;
            for (std::int64_t i = 0; i < n; ++i)
                if (mask >> i & 1u) exps.push_back(i);
            const ExplicitRootSet u(Modulus(n), exps);
            bool all_nonneg = true;
            for (std::int64_t k = 0; k < n && all_nonneg; ++k) {
                const auto v = power_sum_explicit(u, k).as_integer();
                all_nonneg = v.has_value() && *v >= 0;
            }
            REQUIRE(all_nonneg == is_group_explicit(u));
        }
    }
    // Sampled 13 <= n <= 24, plus every actual subgroup as a positive case.
    for (std::int64_t n = 13; n <= 24; ++n) {
        std::vector<ExplicitRootSet> sets;
        for (std::int64_t d : divisors(n)) {
            std::vector<std::int64_t> exps;
            for (std::int64_t i = 0; i < n; i += d) exps.push_back(i);
            sets.emplace_back(Modulus(n), exps);
        }
        for (std::uint64_t s = 0; s < 10000; ++s) {
            SplitMix64 rng = keyed_rng(4242, static_cast<std::uint64_t>(n) * 100000 + s);
            std::vector<std::int64_t> exps;
            const std::uint64_t bits = rng.next();
            for (std::int64_t i = 0; i < n; ++i)
                if (bits >> i & 1u) exps.push_back(i);
            if (exps.empty()) exps.push_back(static_cast<std::int64_t>(rng.next_below(n)));
            sets.emplace_back(Modulus(n), exps);
        }
        for (const ExplicitRootSet& u : sets) {
            bool all_nonneg = true;
            for (std::int64_t k = 0; k < n && all_nonneg; ++k) {
                const auto v = power_sum_explicit(u, k).as_integer();
                all_nonneg = v.has_value() && *v >= 0;
            }
            REQUIRE(all_nonneg == is_group_explicit(u));
        }
    }
}

TEST_CASE("type validation errors") {
    CHECK_THROWS_AS(DivisorSystem(Modulus(12), {5}), InvalidInput);
    CHECK_THROWS_AS(DivisorSystem(Modulus(12), {}), InvalidInput);
    CHECK_THROWS_AS(DivisorFilter(Modulus(12), 5), InvalidInput);
    CHECK_THROWS_AS(ExplicitRootSet(Modulus(12), {12}), InvalidInput);
    CHECK_THROWS_AS(ExplicitRootSet(Modulus(12), {-1}), InvalidInput);
    CHECK_THROWS_AS(ExplicitRootSet(Modulus(12), {}), InvalidInput);
}
