#include "unityf/rootset.hpp"

#include <algorithm>
#include <string>

#include "unityf/checked.hpp"
#include "unityf/parallel.hpp"

namespace unityf {

DivisorSystem::DivisorSystem(Modulus n_, std::vector<std::int64_t> divisors_in_system)
    : n(n_), e(std::move(divisors_in_system)) {
    if (e.empty()) throw InvalidInput("DivisorSystem: system must be nonempty");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (std::int64_t d : e)
        if (d < 1 || n.value % d != 0)
            throw InvalidInput("DivisorSystem: " + std::to_string(d) + " does not divide " +
                               std::to_string(n.value));
}

DivisorFilter::DivisorFilter(Modulus n_, std::int64_t e_) : n(n_), e(e_) {
    if (e < 1 || n.value % e != 0)
        throw InvalidInput("DivisorFilter: " + std::to_string(e) + " does not divide " +
                           std::to_string(n.value));
}

DivisorSystem DivisorFilter::system() const {
    std::vector<std::int64_t> members;
    for (std::int64_t d : divisors(n.value))
        if (d % e == 0) members.push_back(d);
    return DivisorSystem(n, std::move(members));
}

ExplicitRootSet::ExplicitRootSet(Modulus n_, std::vector<std::int64_t> exponents_mod_n)
    : n(n_), exponents(std::move(exponents_mod_n)) {
    if (exponents.empty()) throw InvalidInput("ExplicitRootSet: set must be nonempty");
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    for (std::int64_t i : exponents)
        if (i < 0 || i >= n.value)
            throw InvalidInput("ExplicitRootSet: exponent " + std::to_string(i) +
                               " outside 0.." + std::to_string(n.value - 1));
}

namespace {

/// One term phi(n/d) / phi(n/(n,dc)) * mu(n/(n,dc)); the division is a proof
/// fact (n/(n,dc) divides n/d), enforced here as a runtime assertion.
std::int64_t power_sum_term(std::int64_t n, std::int64_t d, std::int64_t c) {
    const std::int64_t g = gcd(n, checked_mul(d, c));
    const std::int64_t m = n / g;
    const std::int64_t phi_top = euler_phi(n / d);
    const std::int64_t phi_bot = euler_phi(m);
    if (phi_top % phi_bot != 0)
        throw Error("power_sum: phi divisibility violated at n=" + std::to_string(n) +
                    " d=" + std::to_string(d) + " c=" + std::to_string(c));
    return checked_mul(phi_top / phi_bot, moebius(m));
}

} // namespace

std::int64_t power_sum(const DivisorSystem& sys, std::int64_t c) {
    if (c < 1 || sys.n.value % c != 0)
        throw InvalidInput("power_sum: c = " + std::to_string(c) + " does not divide " +
                           std::to_string(sys.n.value));
    std::int64_t acc = 0;
    for (std::int64_t d : sys.e) acc = checked_add(acc, power_sum_term(sys.n.value, d, c));
    return acc;
}

std::int64_t filter_power_sum_closed_form(const DivisorFilter& f, std::int64_t c) {
    if (c < 1 || f.n.value % c != 0)
        throw InvalidInput("filter_power_sum_closed_form: c does not divide n");
    const std::int64_t quotient = f.n.value / f.e;
    return (c % quotient == 0) ? quotient : 0;
}

std::optional<std::int64_t> is_divisor_filter(const DivisorSystem& sys) {
    std::int64_t g = 0;
    for (std::int64_t d : sys.e) g = gcd(g, d);
    // Every member lies in (g)_n already, so E = (g)_n iff the sizes match.
    if (sys.e.size() == static_cast<std::size_t>(divisor_count(sys.n.value / g))) return g;
    return std::nullopt;
}

DivisorSystem reduce(const DivisorSystem& sys, std::int64_t p) {
    if (!is_prime(p) || sys.n.value % p != 0)
        throw InvalidInput("reduce: p = " + std::to_string(p) + " is not a prime divisor of " +
                           std::to_string(sys.n.value));
    std::vector<std::int64_t> members;
    for (std::int64_t d : sys.e)
        if (d % p == 0) members.push_back(d / p);
    if (members.empty())
        throw EmptyReduction("reduce: p = " + std::to_string(p) + " divides no member");
    return DivisorSystem(Modulus(sys.n.value / p), std::move(members));
}

ExplicitRootSet to_explicit(const DivisorSystem& sys) {
    const std::int64_t n = sys.n.value;
    if (n > kMaxExplicitModulus)
        throw CapExceeded("to_explicit: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxExplicitModulus));
    std::vector<std::int64_t> exponents;
    for (std::int64_t i = 0; i < n; ++i)
        if (std::binary_search(sys.e.begin(), sys.e.end(), gcd(i, n))) exponents.push_back(i);
    return ExplicitRootSet(sys.n, std::move(exponents));
}

CyclotomicElement power_sum_explicit(const ExplicitRootSet& u, std::int64_t k) {
    const std::int64_t n = u.n.value;
    const std::int64_t kk = ((k % n) + n) % n;
    CyclotomicElement acc(u.n);
    for (std::int64_t i : u.exponents) acc.accumulate_root_power(i * kk % n);
    return acc;
}

bool is_group_explicit(const ExplicitRootSet& u) {
    const std::int64_t n = u.n.value;
    if (n > kMaxExplicitModulus)
        throw CapExceeded("is_group_explicit: n exceeds cap");
    std::vector<bool> member(static_cast<std::size_t>(n), false);
    for (std::int64_t i : u.exponents) member[static_cast<std::size_t>(i)] = true;
    // A nonempty finite subset of Z_n closed under addition is a subgroup.
    for (std::int64_t a : u.exponents)
        for (std::int64_t b : u.exponents)
            if (!member[static_cast<std::size_t>((a + b) % n)]) return false;
    return true;
}

std::optional<DivisorSystem> galois_orbit_decomposition(const ExplicitRootSet& u) {
    const std::int64_t n = u.n.value;
    if (n > kMaxExplicitModulus)
        throw CapExceeded("galois_orbit_decomposition: n exceeds cap");
    std::vector<bool> member(static_cast<std::size_t>(n), false);
    for (std::int64_t i : u.exponents) member[static_cast<std::size_t>(i)] = true;
    // Orbit of gcd-class d is {i : gcd(i, n) = d}; U must take each orbit
    // entirely or not at all.
    std::vector<std::int64_t> in_system;
    std::vector<std::int64_t> seen_full, seen_empty;
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t d = gcd(i, n);
        auto& bucket = member[static_cast<std::size_t>(i)] ? seen_full : seen_empty;
        bucket.push_back(d);
    }
    std::sort(seen_full.begin(), seen_full.end());
    seen_full.erase(std::unique(seen_full.begin(), seen_full.end()), seen_full.end());
    std::sort(seen_empty.begin(), seen_empty.end());
    seen_empty.erase(std::unique(seen_empty.begin(), seen_empty.end()), seen_empty.end());
    for (std::int64_t d : seen_full)
        if (std::binary_search(seen_empty.begin(), seen_empty.end(), d)) return std::nullopt;
    in_system = seen_full;
    return DivisorSystem(u.n, std::move(in_system));
}

CheckReport check_roots_theorem(Modulus n, int jobs, int max_divisors) {
    const auto divs = divisors(n.value);
    const int tau = static_cast<int>(divs.size());
    if (tau > max_divisors)
        throw CapExceeded("check_roots_theorem: tau(" + std::to_string(n.value) + ") = " +
                          std::to_string(tau) + " exceeds cap " + std::to_string(max_divisors));

    // Term table: term[di][ci] is the (d, c) contribution to a_c.
    std::vector<std::vector<std::int64_t>> term(divs.size(),
                                                std::vector<std::int64_t>(divs.size()));
    for (std::size_t di = 0; di < divs.size(); ++di)
        for (std::size_t ci = 0; ci < divs.size(); ++ci) {
            const std::int64_t g = gcd(n.value, divs[di] * divs[ci]);
            const std::int64_t m = n.value / g;
            const std::int64_t phi_top = euler_phi(n.value / divs[di]);
            const std::int64_t phi_bot = euler_phi(m);
            if (phi_top % phi_bot != 0)
                throw Error("check_roots_theorem: phi divisibility violated");
            term[di][ci] = phi_top / phi_bot * moebius(m);
        }

    // The tau filter system masks: (e)_n as a bitmask over divisor indices.
    std::vector<std::uint32_t> filter_masks;
    for (std::size_t ei = 0; ei < divs.size(); ++ei) {
        std::uint32_t mask = 0;
        for (std::size_t di = 0; di < divs.size(); ++di)
            if (divs[di] % divs[ei] == 0) mask |= 1u << di;
        filter_masks.push_back(mask);
    }
    std::sort(filter_masks.begin(), filter_masks.end());

    const std::uint64_t total = (std::uint64_t{1} << tau) - 1;
    auto parts = run_chunked<CheckReport>(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        CheckReport part;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const std::uint32_t system = static_cast<std::uint32_t>(idx + 1);
            ++part.tested;
            const bool filter =
                std::binary_search(filter_masks.begin(), filter_masks.end(), system);
            if (filter) ++part.filters;
            bool all_nonneg = true;
            for (std::size_t ci = 0; ci < divs.size() && all_nonneg; ++ci) {
                std::int64_t a = 0;
                std::uint32_t rest = system;
                while (rest != 0) {
                    const int di = __builtin_ctz(rest);
                    rest &= rest - 1;
                    a += term[static_cast<std::size_t>(di)][ci];
                }
                if (a < 0) all_nonneg = false;
            }
            if (all_nonneg != filter)
                part.add_failure("n=" + std::to_string(n.value) +
                                 ";system_mask=" + std::to_string(system) +
                                 (filter ? ";filter-with-negative-a_c"
                                         : ";nonfilter-with-all-a_c>=0"));
        }
        return part;
    });
    CheckReport report;
    for (const auto& p : parts) report.merge(p);
    return report;
}

} // namespace unityf
