#include "unityf/setfilter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "unityf/parallel.hpp"

namespace unityf {

GroundSet::GroundSet(int size) : mask(0) {
    if (size < 0 || size > kMaxGroundSize)
        throw InvalidInput("GroundSet: size must be in 0..16, got " + std::to_string(size));
    mask = size == 0 ? 0u : (1u << size) - 1u;
}

GroundSet GroundSet::from_mask(SubsetMask m) {
    if (m >= (1u << kMaxGroundSize))
        throw InvalidInput("GroundSet: mask exceeds 16 elements");
    GroundSet g;
    g.mask = m;
    return g;
}

std::vector<int> GroundSet::elements() const {
    std::vector<int> out;
    for (int p = 0; p < kMaxGroundSize; ++p)
        if (mask >> p & 1u) out.push_back(p);
    return out;
}

AtomWeights::AtomWeights(GroundSet ground_, std::vector<double> weights)
    : ground(ground_), w(std::move(weights)) {
    for (int p : ground.elements()) {
        if (static_cast<std::size_t>(p) >= w.size())
            throw InvalidInput("AtomWeights: no weight for element " + std::to_string(p));
        if (!(w[static_cast<std::size_t>(p)] >= 0.0) || !std::isfinite(w[static_cast<std::size_t>(p)]))
            throw InvalidInput("AtomWeights: weight of element " + std::to_string(p) +
                               " must be finite and nonnegative");
    }
}

double AtomWeights::mu(SubsetMask subset) const {
    double acc = 0.0;
    SubsetMask rest = subset;
    while (rest != 0) {
        const int p = __builtin_ctz(rest);
        rest &= rest - 1;
        acc += w[static_cast<std::size_t>(p)];
    }
    return acc;
}

SetSystem::SetSystem(GroundSet ground_, std::vector<SubsetMask> members_)
    : ground(ground_), members(std::move(members_)) {
    if (members.empty()) throw InvalidInput("SetSystem: system must be nonempty");
    for (SubsetMask d : members)
        if ((d & ~ground.mask) != 0)
            throw InvalidInput("SetSystem: member is not a subset of the ground set");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

SetSystem up_set(GroundSet ground, SubsetMask a) {
    if ((a & ~ground.mask) != 0) throw InvalidInput("up_set: A is not a subset of the ground set");
    std::vector<SubsetMask> members;
    const SubsetMask free = ground.mask & ~a;
    SubsetMask s = free;
    // Enumerate all submasks of `free` (including 0), largest first.
    while (true) {
        members.push_back(a | s);
        if (s == 0) break;
        s = (s - 1) & free;
    }
    return SetSystem(ground, std::move(members));
}

double alt_sum(const SetSystem& e, const AtomWeights& mu, SubsetMask c) {
    if ((c & ~e.ground.mask) != 0) throw InvalidInput("alt_sum: C is not a subset of the ground set");
    double acc = 0.0;
    for (SubsetMask d : e.members) {
        const int parity = __builtin_popcount(c | d) & 1;
        const double term = std::exp(mu.mu(c & ~d));
        acc += parity ? -term : term;
    }
    return (e.ground.size() & 1) ? -acc : acc;
}

std::optional<SubsetMask> is_filter(const SetSystem& e) {
    SubsetMask a = e.ground.mask;
    for (SubsetMask d : e.members) a &= d;
    // Members are distinct supersets of their intersection A, so E is the full
    // up-set of A iff it has all 2^|N-A| of them.
    const int free_bits = __builtin_popcount(e.ground.mask & ~a);
    if (e.members.size() == (std::uint64_t{1} << free_bits)) return a;
    return std::nullopt;
}

double filter_alt_sum_closed_form(GroundSet ground, SubsetMask a, const AtomWeights& mu,
                                  SubsetMask c) {
    if ((a & ~ground.mask) != 0 || (c & ~ground.mask) != 0)
        throw InvalidInput("filter_alt_sum_closed_form: subset outside ground set");
    if ((c | a) != ground.mask) return 0.0;
    SubsetMask rest = ground.mask & ~a;
    double prod = std::exp(mu.mu(rest));
    while (rest != 0) {
        const int p = __builtin_ctz(rest);
        rest &= rest - 1;
        prod *= 1.0 + std::exp(-mu.w[static_cast<std::size_t>(p)]);
    }
    return prod;
}

SetSystem reduce(const SetSystem& e, int p) {
    if (!e.ground.contains(p)) throw InvalidInput("reduce: element not in the ground set");
    const SubsetMask bit = 1u << p;
    std::vector<SubsetMask> members;
    for (SubsetMask d : e.members)
        if (d & bit) members.push_back(d & ~bit);
    if (members.empty())
        throw EmptyReduction("reduce: element " + std::to_string(p) + " occurs in no member");
    return SetSystem(GroundSet::from_mask(e.ground.mask & ~bit), std::move(members));
}

double alt_sum_tolerance(const SetSystem& e, const AtomWeights& mu, SubsetMask c) {
    return 1e-9 * (1.0 + static_cast<double>(e.members.size()) * std::exp(mu.mu(c)));
}

namespace {

/// All subsets of the ground set, ascending as masks ((s - mask) & mask walk).
std::vector<SubsetMask> all_subsets(GroundSet ground) {
    std::vector<SubsetMask> out;
    out.reserve(std::size_t{1} << ground.size());
    SubsetMask s = 0;
    while (true) {
        out.push_back(s);
        if (s == ground.mask) break;
        s = (s - ground.mask) & ground.mask;
    }
    return out;
}

std::string system_string(const SetSystem& sys) {
    std::string s = "{";
    for (std::size_t i = 0; i < sys.members.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sys.members[i]);
    }
    return s + "}";
}

/// One theorem instance: (all a_C >= -tol) must equal is_filter(E).
void check_one_system(const SetSystem& sys, const AtomWeights& mu, CheckReport& report) {
    ++report.tested;
    const bool filter = is_filter(sys).has_value();
    if (filter) ++report.filters;
    bool all_nonneg = true;
    for (SubsetMask c : all_subsets(sys.ground)) {
        if (alt_sum(sys, mu, c) < -alt_sum_tolerance(sys, mu, c)) {
            all_nonneg = false;
            break;
        }
    }
    if (all_nonneg != filter)
        report.add_failure("system=" + system_string(sys) +
                           (filter ? ";filter-with-negative-a_C" : ";nonfilter-with-all-a_C>=0"));
}

} // namespace

CheckReport check_filter_theorem(GroundSet ground, const AtomWeights& mu, int jobs,
                                 std::uint64_t samples, std::uint64_t seed, int max_ground) {
    const int size = ground.size();
    const int cap = std::min(std::max(max_ground, kMaxExhaustiveGroundSize), kMaxGroundSize);
    const auto subsets = all_subsets(ground);
    const std::uint64_t n_subsets = subsets.size();

    if (size <= kMaxExhaustiveGroundSize) {
        const std::uint64_t total = (std::uint64_t{1} << n_subsets) - 1;
        auto parts = run_chunked<CheckReport>(total, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
            CheckReport part;
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                const std::uint64_t system_bits = idx + 1;
                std::vector<SubsetMask> members;
                for (std::uint64_t b = 0; b < n_subsets; ++b)
                    if (system_bits >> b & 1u) members.push_back(subsets[b]);
                check_one_system(SetSystem(ground, std::move(members)), mu, part);
            }
            return part;
        });
        CheckReport report;
        for (const auto& p : parts) report.merge(p);
        return report;
    }

    if (size > cap)
        throw CapExceeded("check_filter_theorem: ground size " + std::to_string(size) +
                          " exceeds cap " + std::to_string(cap));
    if (samples == 0)
        throw InvalidInput("check_filter_theorem: sampled mode (size > 4) needs samples >= 1");

    auto parts = run_chunked<CheckReport>(samples, jobs, [&](std::uint64_t lo, std::uint64_t hi) {
        CheckReport part;
        for (std::uint64_t i = lo; i < hi; ++i) {
            SplitMix64 rng = keyed_rng(seed, i);
            std::vector<SubsetMask> members;
            std::uint64_t word = 0;
            for (std::uint64_t b = 0; b < n_subsets; ++b) {
                if (b % 64 == 0) word = rng.next();
                if ((word >> (b % 64)) & 1u) members.push_back(subsets[b]);
            }
            if (members.empty()) members.push_back(subsets[rng.next_below(n_subsets)]);
            check_one_system(SetSystem(ground, std::move(members)), mu, part);
        }
        return part;
    });
    CheckReport report;
    for (const auto& p : parts) report.merge(p);
    return report;
}

} // namespace unityf
