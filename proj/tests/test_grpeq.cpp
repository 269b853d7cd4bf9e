#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "unityf/divlattice.hpp"
#include "unityf/fourierpairs.hpp"
#include "unityf/grpeq.hpp"

using namespace unityf;

TEST_CASE("AbelianGroup: indexing, arithmetic, caps") {
    const AbelianGroup g({2, 3});
    CHECK(g.order() == 6);
    CHECK(g.exponent() == 6);
    for (std::int64_t i = 0; i < 6; ++i) CHECK(g.index_of(g.tuple_of(i)) == i);
    CHECK(g.add(g.index_of({1, 2}), g.index_of({1, 1})) == g.index_of({0, 0}));
    CHECK(g.neg(g.index_of({1, 2})) == g.index_of({1, 1}));
    CHECK(g.element_order(g.index_of({1, 1})) == 6);
    CHECK(g.element_order(0) == 1);

    const AbelianGroup v4({2, 2});
    CHECK(v4.exponent() == 2);

    CHECK_THROWS_AS(AbelianGroup({65}), CapExceeded);
    CHECK_THROWS_AS(AbelianGroup({8, 9}), CapExceeded);
    CHECK_THROWS_AS(AbelianGroup({0}), InvalidInput);
    CHECK_THROWS_AS(AbelianGroup({}), InvalidInput);
}

TEST_CASE("verify_equations: worked examples") {
    // G = Z_1, g(0,0) = 1.
    const GroupSolution one(AbelianGroup({1}), Modulus(1), 1,
                            {CyclotomicElement::integer(Modulus(1), 1)});
    const CheckReport r1 = verify_equations(one);
    CHECK(r1.tested == 4); // 2*1*1 + 2
    CHECK(r1.failed == 0);

    // G = Z_2, g(x,y) = (1/2)(-1)^{xy}.
    const CheckReport r2 = verify_equations(build_cyclic_solution(Modulus(2), 2, 1));
    CHECK(r2.tested == 10);
    CHECK(r2.failed == 0);

    // G = Z_2, g identically 0: grpeq03 fails.
    const GroupSolution zero(AbelianGroup({2}), Modulus(2), 1,
                             std::vector<CyclotomicElement>(4, CyclotomicElement(Modulus(2))));
    const CheckReport rz = verify_equations(zero);
    CHECK(rz.failed > 0);
    bool grpeq03_seen = false;
    for (const auto& cx : rz.counterexamples) grpeq03_seen |= cx.find("grpeq03") != std::string::npos;
    CHECK(grpeq03_seen);
}

TEST_CASE("build_cyclic_solution: worked examples") {
    // n=2, d=2, t=1: g(x,y) = (1/2)(-1)^{xy}.
    const GroupSolution g2 = build_cyclic_solution(Modulus(2), 2, 1);
    CHECK(g2.denominator == 2);
    CHECK(g2.num(0, 0).as_integer() == 1);
    CHECK(g2.num(0, 1).as_integer() == 1);
    CHECK(g2.num(1, 0).as_integer() == 1);
    CHECK(g2.num(1, 1).as_integer() == -1);

    // d=1: the indicator of (0,0), denominator 1.
    const GroupSolution ind = build_cyclic_solution(Modulus(5), 1, 0);
    CHECK(ind.denominator == 1);
    CHECK(ind.num(0, 0).as_integer() == 1);
    for (std::int64_t x = 0; x < 5; ++x)
        for (std::int64_t y = 0; y < 5; ++y)
            if (x != 0 || y != 0) CHECK(ind.num(x, y).is_zero());

    // n=12, d=3, t=1: support (4Z)^2, entries (1/3) xi_3^{(x/4)(y/4)}.
    const GroupSolution g12 = build_cyclic_solution(Modulus(12), 3, 1);
    CHECK(g12.denominator == 3);
    CHECK(verify_equations(g12).failed == 0);
    CHECK(g12.num(4, 8).equals(CyclotomicElement::root_power(Modulus(12), 8)));
    CHECK(g12.num(4, 1).is_zero());

    CHECK_THROWS_AS(build_cyclic_solution(Modulus(12), 5, 0), InvalidInput);
    CHECK_THROWS_AS(build_cyclic_solution(Modulus(12), 3, 3), InvalidInput);
}

TEST_CASE("build_pairing_solution: worked examples") {
    // H1 = H2 = {0}, d = 1.
    const AbelianGroup z4({4});
    const GroupSolution triv =
        build_pairing_solution(z4, SubgroupPairing(z4, {0}, {0}, {{0}}));
    CHECK(solutions_equal(triv, build_cyclic_solution(Modulus(4), 1, 0)));

    // G = Z_2 x Z_2, H1 = <(1,0)>, H2 = <(0,1)>, omega((1,0),(0,1)) = -1.
    const AbelianGroup v4({2, 2});
    const std::int64_t a = v4.index_of({1, 0});
    const std::int64_t b = v4.index_of({0, 1});
    const GroupSolution cross =
        build_pairing_solution(v4, SubgroupPairing(v4, {0, a}, {0, b}, {{0, 0}, {0, 1}}));
    CHECK(verify_equations(cross).failed == 0);

    // G = Z_4, H1 = H2 = 2Z_4, omega(2,2) = -1: equals the cyclic (d=2,t=1).
    const GroupSolution half =
        build_pairing_solution(z4, SubgroupPairing(z4, {0, 2}, {0, 2}, {{0, 0}, {0, 1}}));
    CHECK(verify_equations(half).failed == 0);
    CHECK(half.denominator == 2);
    CHECK(solutions_equal(half, build_cyclic_solution(Modulus(4), 2, 1)));
}

TEST_CASE("SubgroupPairing validates its invariants") {
    const AbelianGroup z4({4});
    // {0,1} is not closed under addition in Z_4.
    CHECK_THROWS_AS(SubgroupPairing(z4, {0, 1}, {0, 2}, {{0, 0}, {0, 0}}), InvalidInput);
    // Sizes must match.
    CHECK_THROWS_AS(SubgroupPairing(z4, {0}, {0, 2}, {{0, 0}}), InvalidInput);
    // omega must be bimultiplicative: omega(2,2)=xi_2, but omega(0,2) != 1 breaks it.
    CHECK_THROWS_AS(SubgroupPairing(z4, {0, 2}, {0, 2}, {{0, 1}, {0, 1}}), InvalidInput);
}

TEST_CASE("GroupSolution: denominator must divide the group order") {
    const AbelianGroup z2({2});
    std::vector<CyclotomicElement> table(4, CyclotomicElement(Modulus(2)));
    CHECK_THROWS_AS(GroupSolution(z2, Modulus(2), 3, table), InvalidInput);
    CHECK_THROWS_AS(GroupSolution(z2, Modulus(2), 0, table), InvalidInput);
    CHECK_THROWS_AS(GroupSolution(z2, Modulus(2), 1, {}), InvalidInput);
}

TEST_CASE("enumerate_cyclic_solutions: counts and verification, n <= 24") {
    CHECK(enumerate_cyclic_solutions(Modulus(1)).size() == 1);
    CHECK(enumerate_cyclic_solutions(Modulus(2)).size() == 3);
    CHECK(enumerate_cyclic_solutions(Modulus(6)).size() == 12);
    for (std::int64_t n = 1; n <= 24; ++n) {
        const auto sols = enumerate_cyclic_solutions(Modulus(n));
        REQUIRE(sols.size() == static_cast<std::uint64_t>(divisor_sum(n)));
        for (const auto& g : sols) REQUIRE(verify_equations(g).failed == 0);
        // Pairwise distinct as tables.
        for (std::size_t i = 0; i < sols.size(); ++i)
            for (std::size_t j = i + 1; j < sols.size(); ++j)
                REQUIRE_FALSE(solutions_equal(sols[i], sols[j]));
    }
}

TEST_CASE("solutions_equal is mathematical, not representational") {
    // The same Z_2 solution written over xi_2 and over xi_4 (xi_4^2 = -1).
    const GroupSolution a = build_cyclic_solution(Modulus(2), 2, 1);
    const AbelianGroup z2({2});
    std::vector<CyclotomicElement> table;
    table.push_back(CyclotomicElement::root_power(Modulus(4), 0));
    table.push_back(CyclotomicElement::root_power(Modulus(4), 0));
    table.push_back(CyclotomicElement::root_power(Modulus(4), 0));
    table.push_back(CyclotomicElement::root_power(Modulus(4), 2));
    const GroupSolution b(z2, Modulus(4), 2, table);
    CHECK(solutions_equal(a, b));
    CHECK(solutions_equal(b, a));

    // Scaling numerators and denominator together changes nothing (on Z_4,
    // where the doubled denominator still divides the order).
    const GroupSolution c = build_cyclic_solution(Modulus(4), 2, 1);
    std::vector<CyclotomicElement> doubled;
    for (const auto& e : c.table) doubled.push_back(e.scale(2));
    const GroupSolution c2(AbelianGroup({4}), c.l, 4, doubled);
    CHECK(solutions_equal(c, c2));
    CHECK_FALSE(solutions_equal(c, build_cyclic_solution(Modulus(4), 2, 0)));
}

TEST_CASE("g_from_eps: worked examples") {
    // Row-0-all-ones is the d = 1 solution: the indicator of (0,0).
    const GroupSolution ind = g_from_eps(build_eps(EpsParams(Modulus(6), 1, 0)));
    CHECK(solutions_equal(ind, build_cyclic_solution(Modulus(6), 1, 0)));
    CHECK(ind.denominator == 1);

    // n = 2: eps(2,2,1) maps to (1/2)(-1)^{xy}.
    const GroupSolution g = g_from_eps(build_eps(EpsParams(Modulus(2), 2, 1)));
    CHECK(solutions_equal(g, build_cyclic_solution(Modulus(2), 2, 1)));

    BinaryMatrix bad{Modulus(4)};
    bad.set(0, 0, 1);
    CHECK_THROWS_AS(g_from_eps(bad), InvalidInput);          // not idempotent
    CHECK_THROWS_AS(g_from_eps(BinaryMatrix{Modulus(4)}), InvalidInput); // zero
}

TEST_CASE("round-trip eps_from_g after g_from_eps, n <= 12") {
    for (std::int64_t n = 1; n <= 12; ++n)
        for (std::int64_t d : divisors(n))
            for (std::int64_t t = 0; t < d; ++t) {
                const BinaryMatrix eps = build_eps(EpsParams(Modulus(n), d, t));
                const GroupSolution g = g_from_eps(eps);
                REQUIRE(g.denominator == d);
                REQUIRE(eps_from_g(g) == eps);
                // Observed parameter correspondence: (d, t) -> (d, t).
                REQUIRE(solutions_equal(g, build_cyclic_solution(Modulus(n), d, t)));
            }
}

TEST_CASE("check_cyclic_bridge: completeness bijection, n <= 12") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        const CheckReport r = check_cyclic_bridge(Modulus(n));
        const std::uint64_t s = static_cast<std::uint64_t>(divisor_sum(n));
        REQUIRE(r.failed == 0);
        REQUIRE(r.filters == s);
        REQUIRE(r.tested == s + s * (s - 1) / 2);
    }
}

TEST_CASE("Z_2 x Z_2: all subgroup pairings give verified, distinct solutions") {
    const AbelianGroup v4({2, 2});
    const auto subgroups = enumerate_subgroups(v4);
    REQUIRE(subgroups.size() == 5); // trivial, three of order 2, full
    std::vector<GroupSolution> sols;
    for (const auto& h1 : subgroups)
        for (const auto& h2 : subgroups) {
            if (h1.size() != h2.size()) continue;
            for (const auto& pairing : enumerate_pairings(v4, h1, h2)) {
                sols.push_back(build_pairing_solution(v4, pairing));
                REQUIRE(verify_equations(sols.back()).failed == 0);
            }
        }
    CHECK(sols.size() == 35); // 1 + 9*2 + 16
    for (std::size_t i = 0; i < sols.size(); ++i)
        for (std::size_t j = i + 1; j < sols.size(); ++j)
            REQUIRE_FALSE(solutions_equal(sols[i], sols[j]));
}

TEST_CASE("enumerate_subgroups on cyclic groups finds tau(n) subgroups") {
    for (std::int64_t n : {1, 2, 6, 12}) {
        const AbelianGroup g({n});
        CHECK(enumerate_subgroups(g).size() == static_cast<std::size_t>(divisor_count(n)));
    }
}
