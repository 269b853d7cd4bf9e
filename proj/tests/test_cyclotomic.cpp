#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "unityf/cyclotomic.hpp"
#include "unityf/divlattice.hpp"
#include "unityf/parallel.hpp"

using namespace unityf;

namespace {

CyclotomicElement random_element(Modulus n, SplitMix64& rng) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n.value));
    for (auto& c : coeffs) c = static_cast<std::int64_t>(rng.next_below(7)) - 3;
    return CyclotomicElement(n, coeffs);
}

} // namespace

TEST_CASE("ring operation examples") {
    const Modulus n4(4);
    // xi_4 * xi_4^3 = xi_4^0.
    const auto prod = CyclotomicElement::root_power(n4, 1).mul(CyclotomicElement::root_power(n4, 3));
    CHECK(prod.coeffs() == std::vector<std::int64_t>{1, 0, 0, 0});
    CHECK(prod.equals(CyclotomicElement::integer(n4, 1)));

    // a + 0 = a.
    SplitMix64 rng = keyed_rng(7, 0);
    const auto a = random_element(Modulus(6), rng);
    CHECK(a.add(CyclotomicElement(Modulus(6))).coeffs() == a.coeffs());

    // (1 + xi_3)(1 + xi_3^2) = 2 + xi_3 + xi_3^2 as carriers mod x^3 - 1.
    const Modulus n3(3);
    const auto lhs = CyclotomicElement(n3, {1, 1, 0}).mul(CyclotomicElement(n3, {1, 0, 1}));
    CHECK(lhs.coeffs() == std::vector<std::int64_t>{2, 1, 1});

    CHECK_THROWS_AS(CyclotomicElement(n3, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(
        CyclotomicElement::integer(n3, 1).add(CyclotomicElement::integer(Modulus(4), 1)),
        InvalidInput);
}

TEST_CASE("cyclotomic_polynomial: worked examples") {
    CHECK(cyclotomic_polynomial(1).coeffs() == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4).coeffs() == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6).coeffs() == std::vector<std::int64_t>{1, -1, 1});
    const auto& phi105 = cyclotomic_polynomial(105);
    CHECK(phi105.degree() == 48);
    CHECK(phi105.coeff(7) == -2);
    CHECK(phi105.coeff(48) == 1);
    CHECK_THROWS_AS(cyclotomic_polynomial(kMaxCyclotomicOrder + 1), CapExceeded);
}

TEST_CASE("is_zero: worked examples") {
    CHECK(CyclotomicElement(Modulus(3), {1, 1, 1}).is_zero());
    CHECK_FALSE(CyclotomicElement(Modulus(3), {1, 0, 0}).is_zero());
    // [1,0,-1,1,0,-1] at N=6: 1 - xi^2 + xi^3 - xi^5 evaluates to 0 at the
    // primitive 6th root (numeric cross-check below).
    const CyclotomicElement e(Modulus(6), {1, 0, -1, 1, 0, -1});
    CHECK(e.is_zero());
    CHECK(std::abs(e.real_part()) < 1e-9);
    CHECK(std::abs(e.imag_part()) < 1e-9);
}

TEST_CASE("as_integer: worked examples") {
    CHECK(CyclotomicElement(Modulus(4), {3, 0, 0, 0}).as_integer() == 3);
    // xi_6 + xi_6^4 = xi_6 - xi_6 = 0 exactly (xi_6^4 = -xi_6 since xi_6^3 = -1).
    const CyclotomicElement s(Modulus(6), {0, 1, 0, 0, 1, 0});
    CHECK(s.is_zero());
    CHECK(s.as_integer() == 0);
    // The three cube roots of unity inside Z[xi_12] sum to 0.
    CHECK(CyclotomicElement(Modulus(12), {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0}).as_integer() == 0);
    // A genuinely irrational value: xi_12 alone.
    CHECK_FALSE(CyclotomicElement::root_power(Modulus(12), 1).as_integer().has_value());
    CHECK(CyclotomicElement::root_power(Modulus(5), 0, -7).as_integer() == -7);
}

TEST_CASE("ring laws on random elements, N <= 24") {
    for (std::int64_t n : {1, 2, 3, 4, 6, 8, 12, 17, 24}) {
        SplitMix64 rng = keyed_rng(42, static_cast<std::uint64_t>(n));
        const Modulus m(n);
        for (int rep = 0; rep < 8; ++rep) {
            const auto a = random_element(m, rng);
            const auto b = random_element(m, rng);
            const auto c = random_element(m, rng);
            CHECK(a.add(b).add(c).equals(a.add(b.add(c))));
            CHECK(a.mul(b).equals(b.mul(a)));
            CHECK(a.mul(b.mul(c)).equals(a.mul(b).mul(c)));
            CHECK(a.mul(b.add(c)).equals(a.mul(b).add(a.mul(c))));
            CHECK(a.sub(a).is_zero());
        }
    }
}

TEST_CASE("sum of all N-th roots of unity is zero, N >= 2") {
    for (std::int64_t n = 2; n <= 40; ++n) {
        CyclotomicElement acc{Modulus(n)};
        for (std::int64_t k = 0; k < n; ++k) acc.accumulate_root_power(k);
        REQUIRE(acc.is_zero());
        REQUIRE(acc.as_integer() == 0);
    }
}

TEST_CASE("deg Phi_n = phi(n) and prod_{d|n} Phi_d = x^n - 1, n <= 120") {
    for (std::int64_t n = 1; n <= 120; ++n) {
        REQUIRE(cyclotomic_polynomial(n).degree() == euler_phi(n));
        IntPolynomial prod({1});
        for (std::int64_t d : divisors(n)) prod = prod.multiply(cyclotomic_polynomial(d));
        REQUIRE(prod == IntPolynomial::x_power_minus_one(n));
    }
}

TEST_CASE("as_integer certification invariant on random elements") {
    for (std::int64_t n : {6, 12, 15}) {
        SplitMix64 rng = keyed_rng(99, static_cast<std::uint64_t>(n));
        const Modulus m(n);
        std::vector<std::int64_t> phi_carrier(static_cast<std::size_t>(n), 0);
        for (std::int64_t k = 0; k <= euler_phi(n); ++k)
            phi_carrier[static_cast<std::size_t>(k)] = cyclotomic_polynomial(n).coeff(k);
        const CyclotomicElement phi_elem(m, phi_carrier);
        int integers_seen = 0;
        for (int rep = 0; rep < 200; ++rep) {
            CyclotomicElement a = random_element(m, rng);
            // Every fourth draw is a guaranteed integer: Phi_n * r + constant.
            if (rep % 4 == 0)
                a = a.mul(phi_elem).add(
                    CyclotomicElement::integer(m, static_cast<std::int64_t>(rng.next_below(9)) - 4));
            const auto v = a.as_integer();
            if (v) {
                ++integers_seen;
                // Certified: numeric evaluation agrees within 1e-6.
                CHECK(std::abs(a.real_part() - static_cast<double>(*v)) < 1e-6);
                CHECK(std::abs(a.imag_part()) < 1e-6);
                CHECK(a.sub(CyclotomicElement::integer(m, *v)).is_zero());
            } else {
                // No integer within +-2 of the numeric real part passes is_zero.
                const auto base = static_cast<std::int64_t>(std::llround(a.real_part()));
                for (std::int64_t cand = base - 2; cand <= base + 2; ++cand)
                    CHECK_FALSE(a.sub(CyclotomicElement::integer(m, cand)).is_zero());
            }
        }
        CHECK(integers_seen > 0); // the draw includes genuine integers
    }
}

TEST_CASE("reduced() is the same element with carrier of degree < phi(N)") {
    for (std::int64_t n : {4, 6, 12}) {
        SplitMix64 rng = keyed_rng(5, static_cast<std::uint64_t>(n));
        const Modulus m(n);
        for (int rep = 0; rep < 20; ++rep) {
            const auto a = random_element(m, rng);
            const auto r = a.reduced();
            CHECK(r.equals(a));
            CHECK(static_cast<std::int64_t>(r.coeffs().size()) == n);
            for (std::int64_t k = euler_phi(n); k < n; ++k)
                CHECK(r.coeffs()[static_cast<std::size_t>(k)] == 0);
        }
    }
}

TEST_CASE("overflow in coefficient arithmetic is a typed error") {
    const auto big = CyclotomicElement::integer(Modulus(2), INT64_C(1) << 62);
    CHECK_THROWS_AS(big.scale(4), OverflowError);
    CHECK_THROWS_AS(big.mul(big), OverflowError);
}
