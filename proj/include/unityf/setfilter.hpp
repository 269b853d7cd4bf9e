#pragma once

/**
 * @file setfilter.hpp
 * @brief Alternating sums a_C over set systems with an additive measure, and
 *        the filter characterization: a_C >= 0 for all C iff E is an up-set.
 *
 * Subsets of the ground set are 16-bit masks. A ground set is itself a mask,
 * so reducing at an element keeps the absolute indices of the survivors; atom
 * weights are indexed by absolute element index and need no re-threading
 * through reductions.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "unityf/errors.hpp"
#include "unityf/report.hpp"

namespace unityf {

using SubsetMask = std::uint32_t;

/// Ground sets never exceed 16 elements (P(P(N)) enumeration must stay finite).
inline constexpr int kMaxGroundSize = 16;
/// Exhaustive check_theorem cap: 2^(2^4) - 1 = 65535 systems.
inline constexpr int kMaxExhaustiveGroundSize = 4;
/// Sampled check_theorem cap.
inline constexpr int kMaxSampledGroundSize = 8;

/// A set of element indices drawn from 0..15, stored as a mask.
struct GroundSet {
    /// The first `size` indices 0..size-1.
    explicit GroundSet(int size);
    /// An arbitrary index set (for reduced systems).
    static GroundSet from_mask(SubsetMask mask);

    SubsetMask mask;
    int size() const { return __builtin_popcount(mask); }
    bool contains(int p) const { return p >= 0 && p < 32 && (mask >> p & 1u) != 0; }
    std::vector<int> elements() const;

private:
    GroundSet() : mask(0) {}
};

/// Nonnegative finite atom weights; mu(S) = sum of w[p] over p in S.
struct AtomWeights {
    AtomWeights(GroundSet ground, std::vector<double> weights);

    GroundSet ground;
    std::vector<double> w;

    double mu(SubsetMask subset) const;
};

/// A nonempty family of subsets of the ground set, canonically sorted.
struct SetSystem {
    SetSystem(GroundSet ground, std::vector<SubsetMask> members);

    GroundSet ground;
    std::vector<SubsetMask> members;
};

/// All supersets of `a` inside the ground set.
SetSystem up_set(GroundSet ground, SubsetMask a);

/// a_C = (-1)^|N| * sum_{D in E} (-1)^|C u D| * e^{mu(C - D)}.
double alt_sum(const SetSystem& e, const AtomWeights& mu, SubsetMask c);

/// The generator A = intersection of E, iff E is exactly the up-set of A.
std::optional<SubsetMask> is_filter(const SetSystem& e);

/// e^{mu(N-A)} * prod_{p in N-A} (1 + e^{-mu(p)}) when C u A = N, else 0.
double filter_alt_sum_closed_form(GroundSet ground, SubsetMask a, const AtomWeights& mu,
                                  SubsetMask c);

/// E_p = {D - p | p in D, D in E} on ground set N - p. Throws EmptyReduction.
SetSystem reduce(const SetSystem& e, int p);

/// Scaled nonnegativity threshold for the alternating float sum at C.
double alt_sum_tolerance(const SetSystem& e, const AtomWeights& mu, SubsetMask c);

/**
 * Verify Theorem (filter characterization) over every nonempty E subseteq P(N):
 * (all a_C >= -tol) iff is_filter. Exhaustive for ground size <= 4; sampled
 * (`samples` systems from `seed`) for sizes above that, up to `max_ground`
 * (default kMaxSampledGroundSize, raisable to kMaxGroundSize at the caller's
 * risk); larger sizes are rejected.
 */
CheckReport check_filter_theorem(GroundSet ground, const AtomWeights& mu, int jobs = 1,
                                 std::uint64_t samples = 0, std::uint64_t seed = 0,
                                 int max_ground = kMaxSampledGroundSize);

} // namespace unityf
