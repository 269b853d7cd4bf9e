#include "unityf/grpeq.hpp"

#include <algorithm>
#include <string>

#include "unityf/checked.hpp"
#include "unityf/parallel.hpp"

namespace unityf {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

/// Re-express an element of Z[xi_l] in Z[xi_L] for l | L (xi_l = xi_L^{L/l}).
CyclotomicElement lift(const CyclotomicElement& e, Modulus big) {
    const std::int64_t l = e.order();
    if (big.value % l != 0) throw InvalidInput("lift: target order is not a multiple");
    const std::int64_t ratio = big.value / l;
    CyclotomicElement out(big);
    for (std::int64_t k = 0; k < l; ++k) {
        const std::int64_t c = e.coeffs()[static_cast<std::size_t>(k)];
        if (c != 0) out.accumulate_root_power(k * ratio, c);
    }
    return out;
}

bool is_sorted_subgroup(const AbelianGroup& group, const std::vector<std::int64_t>& elems) {
    if (elems.empty() || elems.front() != 0) return false;
    std::vector<char> member(static_cast<std::size_t>(group.order()), 0);
    std::int64_t prev = -1;
    for (std::int64_t e : elems) {
        if (e <= prev || e >= group.order()) return false;
        prev = e;
        member[static_cast<std::size_t>(e)] = 1;
    }
    for (std::int64_t a : elems)
        for (std::int64_t b : elems)
            if (!member[static_cast<std::size_t>(group.add(a, b))]) return false;
    return true;
}

/// Position of each group element inside the sorted list, -1 if absent.
std::vector<std::int64_t> position_map(const AbelianGroup& group,
                                       const std::vector<std::int64_t>& elems) {
    std::vector<std::int64_t> pos(static_cast<std::size_t>(group.order()), -1);
    for (std::size_t i = 0; i < elems.size(); ++i)
        pos[static_cast<std::size_t>(elems[i])] = static_cast<std::int64_t>(i);
    return pos;
}

bool is_bimultiplicative(const AbelianGroup& group, const std::vector<std::int64_t>& h1,
                         const std::vector<std::int64_t>& h2,
                         const std::vector<std::vector<std::int64_t>>& omega, std::int64_t d) {
    const auto pos1 = position_map(group, h1);
    const auto pos2 = position_map(group, h2);
    for (std::size_t i = 0; i < h1.size(); ++i)
        for (std::size_t k = 0; k < h1.size(); ++k) {
            const auto sum = static_cast<std::size_t>(
                pos1[static_cast<std::size_t>(group.add(h1[i], h1[k]))]);
            for (std::size_t j = 0; j < h2.size(); ++j)
                if ((omega[i][j] + omega[k][j]) % d != omega[sum][j]) return false;
        }
    for (std::size_t j = 0; j < h2.size(); ++j)
        for (std::size_t k = 0; k < h2.size(); ++k) {
            const auto sum = static_cast<std::size_t>(
                pos2[static_cast<std::size_t>(group.add(h2[j], h2[k]))]);
            for (std::size_t i = 0; i < h1.size(); ++i)
                if ((omega[i][j] + omega[i][k]) % d != omega[i][sum]) return false;
        }
    return true;
}

} // namespace

AbelianGroup::AbelianGroup(std::vector<std::int64_t> f) : factors(std::move(f)), order_(1) {
    if (factors.empty()) throw InvalidInput("AbelianGroup: at least one cyclic factor required");
    for (std::int64_t n : factors) {
        if (n < 1) throw InvalidInput("AbelianGroup: factors must be positive");
        order_ = checked_mul(order_, n);
    }
    if (order_ > kMaxGroupOrder)
        throw CapExceeded("AbelianGroup: order " + std::to_string(order_) + " exceeds cap " +
                          std::to_string(kMaxGroupOrder));
}

std::int64_t AbelianGroup::exponent() const {
    std::int64_t e = 1;
    for (std::int64_t n : factors) e = lcm(e, n);
    return e;
}

std::vector<std::int64_t> AbelianGroup::tuple_of(std::int64_t index) const {
    if (index < 0 || index >= order_) throw InvalidInput("AbelianGroup: element index out of range");
    std::vector<std::int64_t> t(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        t[i] = index % factors[i];
        index /= factors[i];
    }
    return t;
}

std::int64_t AbelianGroup::index_of(const std::vector<std::int64_t>& tuple) const {
    if (tuple.size() != factors.size())
        throw InvalidInput("AbelianGroup: tuple arity mismatch");
    std::int64_t index = 0;
    std::int64_t stride = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= factors[i])
            throw InvalidInput("AbelianGroup: tuple component out of range");
        index += tuple[i] * stride;
        stride *= factors[i];
    }
    return index;
}

std::int64_t AbelianGroup::add(std::int64_t a, std::int64_t b) const {
    const auto ta = tuple_of(a);
    const auto tb = tuple_of(b);
    std::int64_t index = 0;
    std::int64_t stride = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        index += ((ta[i] + tb[i]) % factors[i]) * stride;
        stride *= factors[i];
    }
    return index;
}

std::int64_t AbelianGroup::neg(std::int64_t a) const {
    const auto t = tuple_of(a);
    std::int64_t index = 0;
    std::int64_t stride = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        index += ((factors[i] - t[i]) % factors[i]) * stride;
        stride *= factors[i];
    }
    return index;
}

std::int64_t AbelianGroup::element_order(std::int64_t a) const {
    const auto t = tuple_of(a);
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < factors.size(); ++i)
        ord = lcm(ord, factors[i] / gcd(factors[i], t[i]));
    return ord;
}

GroupSolution::GroupSolution(AbelianGroup group_, Modulus l_, std::int64_t denominator_,
                             std::vector<CyclotomicElement> numerators)
    : group(std::move(group_)), l(l_), denominator(denominator_), table(std::move(numerators)) {
    if (denominator < 1) throw InvalidInput("GroupSolution: denominator must be positive");
    if (group.order() % denominator != 0)
        throw InvalidInput("GroupSolution: denominator must divide the group order");
    const auto n = static_cast<std::size_t>(group.order());
    if (table.size() != n * n)
        throw InvalidInput("GroupSolution: expected " + std::to_string(n * n) +
                           " table entries, got " + std::to_string(table.size()));
    for (const auto& e : table)
        if (e.order() != l.value)
            throw InvalidInput("GroupSolution: numerator modulus mismatch");
}

void GroupSolution::normalize() {
    for (auto& e : table) e = e.reduced();
    std::int64_t content = 0;
    for (const auto& e : table)
        for (std::int64_t c : e.coeffs()) content = gcd(content, abs64(c));
    const std::int64_t g = gcd(content, denominator);
    if (g <= 1) return;
    for (auto& e : table) {
        std::vector<std::int64_t> coeffs = e.coeffs();
        for (auto& c : coeffs) c /= g;
        e = CyclotomicElement(l, std::move(coeffs));
    }
    denominator /= g;
}

bool solutions_equal(const GroupSolution& g1, const GroupSolution& g2) {
    if (g1.group.factors != g2.group.factors) return false;
    const Modulus big(lcm(g1.l.value, g2.l.value));
    const auto n = static_cast<std::size_t>(g1.group.order());
    for (std::size_t idx = 0; idx < n * n; ++idx) {
        const auto a = lift(g1.table[idx], big).scale(g2.denominator);
        const auto b = lift(g2.table[idx], big).scale(g1.denominator);
        if (!a.sub(b).is_zero()) return false;
    }
    return true;
}

SubgroupPairing::SubgroupPairing(const AbelianGroup& group, std::vector<std::int64_t> h1_elements,
                                 std::vector<std::int64_t> h2_elements,
                                 std::vector<std::vector<std::int64_t>> omega_exponents)
    : h1(std::move(h1_elements)), h2(std::move(h2_elements)), omega(std::move(omega_exponents)),
      d(static_cast<std::int64_t>(h1.size())) {
    if (!is_sorted_subgroup(group, h1) || !is_sorted_subgroup(group, h2))
        throw InvalidInput("SubgroupPairing: element lists must be sorted subgroups");
    if (h1.size() != h2.size())
        throw InvalidInput("SubgroupPairing: subgroups must have equal order");
    if (omega.size() != h1.size())
        throw InvalidInput("SubgroupPairing: omega must have one row per H1 element");
    for (auto& row : omega) {
        if (row.size() != h2.size())
            throw InvalidInput("SubgroupPairing: omega must have one column per H2 element");
        for (auto& e : row) e = ((e % d) + d) % d;
    }
    if (!is_bimultiplicative(group, h1, h2, omega, d))
        throw InvalidInput("SubgroupPairing: omega is not bimultiplicative");
}

CheckReport verify_equations(const GroupSolution& g, int jobs) {
    const std::int64_t n = g.group.order();
    const auto un = static_cast<std::uint64_t>(n);

    // Shared read-only sum table: sub[a][b] = a - b in the group.
    std::vector<std::int64_t> sub_table(static_cast<std::size_t>(n * n));
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b)
            sub_table[static_cast<std::size_t>(a * n + b)] = g.group.add(a, g.group.neg(b));

    const std::uint64_t total = 2 * un * un + 2;
    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        CheckReport part;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            ++part.tested;
            if (idx < 2 * un * un) {
                const bool first_kind = idx < un * un;
                const std::uint64_t cell = first_kind ? idx : idx - un * un;
                const auto x = static_cast<std::int64_t>(cell / un);
                const auto y = static_cast<std::int64_t>(cell % un);
                CyclotomicElement rhs(g.l);
                for (std::int64_t z = 0; z < n; ++z) {
                    // grpeq01 splits y; grpeq02 splits x.
                    const std::int64_t rest = first_kind
                        ? sub_table[static_cast<std::size_t>(y * n + z)]
                        : sub_table[static_cast<std::size_t>(x * n + z)];
                    rhs = rhs.add(first_kind ? g.num(x, z).mul(g.num(x, rest))
                                             : g.num(z, y).mul(g.num(rest, y)));
                }
                const auto lhs = g.num(x, y).scale(g.denominator);
                if (!lhs.sub(rhs).is_zero())
                    part.add_failure(std::string("eq=") + (first_kind ? "grpeq01" : "grpeq02") +
                                     ";x=" + std::to_string(x) + ";y=" + std::to_string(y));
            } else {
                const bool row_sum = idx == 2 * un * un; // grpeq03 sums over y at x = 0
                CyclotomicElement acc(g.l);
                for (std::int64_t z = 0; z < n; ++z)
                    acc = acc.add(row_sum ? g.num(0, z) : g.num(z, 0));
                if (!acc.sub(CyclotomicElement::integer(g.l, g.denominator)).is_zero())
                    part.add_failure(row_sum ? "eq=grpeq03" : "eq=grpeq04");
            }
        }
        return part;
    };

    CheckReport report;
    for (const auto& part : run_chunked<CheckReport>(total, jobs, worker)) report.merge(part);
    return report;
}

GroupSolution build_pairing_solution(const AbelianGroup& group, const SubgroupPairing& p) {
    const std::int64_t n = group.order();
    const Modulus l(p.d);
    std::vector<CyclotomicElement> table(static_cast<std::size_t>(n * n), CyclotomicElement(l));
    for (std::size_t i = 0; i < p.h1.size(); ++i)
        for (std::size_t j = 0; j < p.h2.size(); ++j) {
            if (p.h1[i] >= n || p.h2[j] >= n)
                throw InvalidInput("build_pairing_solution: pairing does not fit the group");
            table[static_cast<std::size_t>(p.h1[i] * n + p.h2[j])] =
                CyclotomicElement::root_power(l, p.omega[i][j]);
        }
    return GroupSolution(group, l, p.d, std::move(table));
}

GroupSolution build_cyclic_solution(Modulus n, std::int64_t d, std::int64_t t) {
    if (d < 1 || n.value % d != 0)
        throw InvalidInput("build_cyclic_solution: d must divide n");
    if (t < 0 || t >= d) throw InvalidInput("build_cyclic_solution: t must satisfy 0 <= t < d");
    AbelianGroup group({n.value});
    const std::int64_t q = n.value / d;
    std::vector<CyclotomicElement> table(static_cast<std::size_t>(n.value * n.value),
                                         CyclotomicElement(n));
    for (std::int64_t s = 0; s < d; ++s)
        for (std::int64_t r = 0; r < d; ++r)
            table[static_cast<std::size_t>((q * s) * n.value + q * r)] =
                CyclotomicElement::root_power(n, (q * t * s * r) % n.value);
    return GroupSolution(std::move(group), n, d, std::move(table));
}

std::vector<GroupSolution> enumerate_cyclic_solutions(Modulus n) {
    std::vector<GroupSolution> out;
    for (std::int64_t d : divisors(n.value))
        for (std::int64_t t = 0; t < d; ++t) out.push_back(build_cyclic_solution(n, d, t));
    return out;
}

GroupSolution g_from_eps(const BinaryMatrix& m) {
    if (!is_idempotent(m)) throw InvalidInput("g_from_eps: matrix is not idempotent");
    const std::int64_t n = m.n.value;
    if (m.total() == 0) throw InvalidInput("g_from_eps: the zero matrix yields no solution");
    AbelianGroup group({n});
    std::vector<CyclotomicElement> table(static_cast<std::size_t>(n * n), CyclotomicElement(m.n));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            auto& acc = table[static_cast<std::size_t>(i * n + j)];
            for (std::int64_t k = 0; k < n; ++k)
                if (m.at(i, k)) acc.accumulate_root_power(j * k);
        }
    GroupSolution g(std::move(group), m.n, n, std::move(table));
    g.normalize();
    return g;
}

BinaryMatrix eps_from_g(const GroupSolution& g) {
    if (g.group.factors.size() != 1)
        throw InvalidInput("eps_from_g: the solution must live on a cyclic group");
    const std::int64_t n = g.group.factors.front();
    const Modulus big(lcm(g.l.value, n));
    const std::int64_t ratio_l = big.value / g.l.value;
    const std::int64_t ratio_n = big.value / n;
    BinaryMatrix eps{Modulus(n)};
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t k = 0; k < n; ++k) {
            CyclotomicElement acc(big);
            for (std::int64_t j = 0; j < n; ++j) {
                const auto& num = g.num(i, j);
                for (std::int64_t c = 0; c < g.l.value; ++c) {
                    const std::int64_t v = num.coeffs()[static_cast<std::size_t>(c)];
                    if (v != 0) acc.accumulate_root_power(c * ratio_l - j * k * ratio_n, v);
                }
            }
            const auto value = acc.as_integer();
            if (value == 0) continue;
            if (value == g.denominator) eps.set(i, k, 1);
            else
                throw NotBinaryPartner("eps_from_g: entry (" + std::to_string(i) + ", " +
                                       std::to_string(k) + ") is not 0 or 1");
        }
    return eps;
}

CheckReport check_cyclic_bridge(Modulus n, int jobs) {
    std::vector<std::pair<std::int64_t, std::int64_t>> params;
    for (std::int64_t d : divisors(n.value))
        for (std::int64_t t = 0; t < d; ++t) params.emplace_back(d, t);
    const auto cyclic = enumerate_cyclic_solutions(n);
    const auto s = static_cast<std::uint64_t>(params.size());

    // Index space: one bridge check per (d, t), then one distinctness check
    // per unordered pair of cyclic solutions.
    const std::uint64_t total = s + s * (s - 1) / 2;
    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        CheckReport part;
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            ++part.tested;
            if (idx < s) {
                const auto [d, t] = params[static_cast<std::size_t>(idx)];
                const auto tag = "n=" + std::to_string(n.value) + ";d=" + std::to_string(d) +
                                 ";t=" + std::to_string(t);
                const auto eps = build_eps(EpsParams(n, d, t));
                const auto g = g_from_eps(eps);
                if (!solutions_equal(g, cyclic[static_cast<std::size_t>(idx)]))
                    part.add_failure(tag + ";g_from_eps is not the (d,t) cyclic solution");
                else if (!(eps_from_g(g) == eps))
                    part.add_failure(tag + ";eps_from_g does not invert g_from_eps");
            } else {
                std::uint64_t k = idx - s;
                std::uint64_t i = 0;
                while (k >= s - 1 - i) { k -= s - 1 - i; ++i; }
                const std::uint64_t j = i + 1 + k;
                if (solutions_equal(cyclic[static_cast<std::size_t>(i)],
                                    cyclic[static_cast<std::size_t>(j)]))
                    part.add_failure("n=" + std::to_string(n.value) + ";duplicate solutions " +
                                     std::to_string(i) + " and " + std::to_string(j));
            }
        }
        return part;
    };

    CheckReport report;
    for (const auto& part : run_chunked<CheckReport>(total, jobs, worker)) report.merge(part);
    report.filters = s;
    return report;
}

std::vector<std::vector<std::int64_t>> enumerate_subgroups(const AbelianGroup& group) {
    const std::int64_t n = group.order();
    if (n > kMaxSubgroupEnumOrder)
        throw CapExceeded("enumerate_subgroups: order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxSubgroupEnumOrder));
    std::vector<std::uint32_t> found;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1u)) continue; // 0 must be a member
        bool closed = true;
        for (std::int64_t a = 0; a < n && closed; ++a) {
            if (!(mask >> a & 1u)) continue;
            for (std::int64_t b = a; b < n; ++b) {
                if (!(mask >> b & 1u)) continue;
                if (!(mask >> group.add(a, b) & 1u)) { closed = false; break; }
            }
        }
        if (closed) found.push_back(mask);
    }
    std::sort(found.begin(), found.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(found.size());
    for (std::uint32_t mask : found) {
        std::vector<std::int64_t> elems;
        for (std::int64_t e = 0; e < n; ++e)
            if (mask >> e & 1u) elems.push_back(e);
        out.push_back(std::move(elems));
    }
    return out;
}

std::vector<SubgroupPairing> enumerate_pairings(const AbelianGroup& group,
                                                const std::vector<std::int64_t>& h1,
                                                const std::vector<std::int64_t>& h2) {
    if (!is_sorted_subgroup(group, h1) || !is_sorted_subgroup(group, h2))
        throw InvalidInput("enumerate_pairings: element lists must be sorted subgroups");
    if (h1.size() != h2.size())
        throw InvalidInput("enumerate_pairings: subgroups must have equal order");
    const auto d = static_cast<std::int64_t>(h1.size());

    // Bimultiplicativity forces omega(x, y) onto multiples of d / gcd(d, |x|, |y|).
    std::vector<std::int64_t> step, choices;
    std::uint64_t total = 1;
    for (std::int64_t x : h1)
        for (std::int64_t y : h2) {
            const std::int64_t g =
                gcd(d, gcd(group.element_order(x), group.element_order(y)));
            step.push_back(d / g);
            choices.push_back(g);
            total = checked_mul(static_cast<std::int64_t>(total), g);
            if (total > kMaxPairingCombinations)
                throw CapExceeded("enumerate_pairings: candidate count exceeds cap " +
                                  std::to_string(kMaxPairingCombinations));
        }

    std::vector<SubgroupPairing> out;
    std::vector<std::vector<std::int64_t>> omega(h1.size(),
                                                 std::vector<std::int64_t>(h2.size(), 0));
    for (std::uint64_t combo = 0; combo < total; ++combo) {
        std::uint64_t rest = combo;
        std::size_t cell = 0;
        for (std::size_t i = 0; i < h1.size(); ++i)
            for (std::size_t j = 0; j < h2.size(); ++j, ++cell) {
                const auto radix = static_cast<std::uint64_t>(choices[cell]);
                omega[i][j] = static_cast<std::int64_t>(rest % radix) * step[cell];
                rest /= radix;
            }
        if (is_bimultiplicative(group, h1, h2, omega, d))
            out.emplace_back(group, h1, h2, omega);
    }
    return out;
}

} // namespace unityf
