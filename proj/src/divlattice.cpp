#include "unityf/divlattice.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "unityf/checked.hpp"

namespace unityf {

Modulus::Modulus(std::int64_t n) : value(n) {
    if (n < 1) throw InvalidInput("modulus must be positive, got " + std::to_string(n));
    if (n > kMaxModulus)
        throw InvalidInput("modulus " + std::to_string(n) + " exceeds cap " +
                           std::to_string(kMaxModulus));
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1) throw InvalidInput("factorize: n must be positive, got " + std::to_string(n));
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    const auto fac = factorize(n);
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : fac) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        std::int64_t pk = p - 1;
        for (int k = 1; k < e; ++k) pk *= p;
        phi = checked_mul(phi, pk);
    }
    return phi;
}

int moebius(std::int64_t n) {
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

int valuation(std::int64_t n, std::int64_t p) {
    if (n < 1) throw InvalidInput("valuation: n must be positive, got " + std::to_string(n));
    if (!is_prime(p))
        throw InvalidInput("valuation: p = " + std::to_string(p) + " is not prime");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::int64_t divisor_count(std::int64_t n) {
    std::int64_t tau = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        tau = checked_mul(tau, e + 1);
    }
    return tau;
}

std::int64_t divisor_sum(std::int64_t n) {
    std::int64_t sigma = 1;
    for (const auto& [p, e] : factorize(n)) {
        std::int64_t geom = 1, pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk = checked_mul(pk, p);
            geom = checked_add(geom, pk);
        }
        sigma = checked_mul(sigma, geom);
    }
    return sigma;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    return checked_mul(a / std::gcd(a, b), b);
}

} // namespace unityf
