#pragma once

/**
 * @file grpeq.hpp
 * @brief The quadratic group-equation system over finite abelian groups:
 *        pairing solutions on subgroup pairs, the explicit cyclic family,
 *        exact verification in Q(xi_L), and the correspondence with binary
 *        Fourier idempotents for cyclic groups.
 *
 * The system for a group G has 2|G|^2 + 2 equations in variables g(x, y):
 *   g(x,y) = sum_{y1+y2=y} g(x,y1) g(x,y2)      (one per (x,y))
 *   g(x,y) = sum_{x1+x2=x} g(x1,y) g(x2,y)      (one per (x,y))
 *   1 = sum_y g(0,y)
 *   1 = sum_x g(x,0)
 * Verification clears the 1/d denominators and decides every equation with
 * the exact cyclotomic zero test; floats are never consulted.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "unityf/cyclotomic.hpp"
#include "unityf/divlattice.hpp"
#include "unityf/errors.hpp"
#include "unityf/fourierpairs.hpp"
#include "unityf/report.hpp"

namespace unityf {

/// Full verification is quadratic in |G|^2; keep groups at desk scale.
inline constexpr std::int64_t kMaxGroupOrder = 64;
/// Subgroup enumeration scans subsets containing 0.
inline constexpr std::int64_t kMaxSubgroupEnumOrder = 16;
/// Cap on the pairing-table candidate combinations scanned per subgroup pair.
inline constexpr std::uint64_t kMaxPairingCombinations = 1u << 20;

/// A finite abelian group prod Z_{n_i}; elements are mixed-radix indices.
struct AbelianGroup {
    explicit AbelianGroup(std::vector<std::int64_t> factors);

    std::vector<std::int64_t> factors;
    std::int64_t order_;

    std::int64_t order() const { return order_; }
    std::int64_t exponent() const;

    std::vector<std::int64_t> tuple_of(std::int64_t index) const;
    std::int64_t index_of(const std::vector<std::int64_t>& tuple) const;
    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const;
    std::int64_t element_order(std::int64_t a) const;
};

/// g: G x G -> Q(xi_L), stored as numerators over a common denominator.
struct GroupSolution {
    GroupSolution(AbelianGroup group, Modulus l, std::int64_t denominator,
                  std::vector<CyclotomicElement> numerators);

    AbelianGroup group;
    Modulus l;
    std::int64_t denominator;
    std::vector<CyclotomicElement> table;

    const CyclotomicElement& num(std::int64_t x, std::int64_t y) const {
        return table[static_cast<std::size_t>(x * group.order() + y)];
    }

    /// Divide out the common integer content of the table and denominator.
    void normalize();
};

/// Mathematical equality g1 = g2 (lift to a common modulus, cross-multiply).
bool solutions_equal(const GroupSolution& g1, const GroupSolution& g2);

/// Subgroups H1, H2 of equal order d with a bimultiplicative pairing
/// omega(x, y) = xi_d^{exponent(x, y)}.
struct SubgroupPairing {
    SubgroupPairing(const AbelianGroup& group, std::vector<std::int64_t> h1_elements,
                    std::vector<std::int64_t> h2_elements,
                    std::vector<std::vector<std::int64_t>> omega_exponents);

    std::vector<std::int64_t> h1;
    std::vector<std::int64_t> h2;
    std::vector<std::vector<std::int64_t>> omega;
    std::int64_t d;
};

/// Check all 2|G|^2 + 2 equations exactly; failures are report entries.
CheckReport verify_equations(const GroupSolution& g, int jobs = 1);

/// g(x,y) = omega(x,y)/d on H1 x H2, 0 elsewhere.
GroupSolution build_pairing_solution(const AbelianGroup& group, const SubgroupPairing& p);

/// The cyclic family: g(x,y) = xi_d^{t s r}/d on x = (n/d)s, y = (n/d)r.
GroupSolution build_cyclic_solution(Modulus n, std::int64_t d, std::int64_t t);

/// All sigma(n) cyclic solutions, (d, t) lexicographic.
std::vector<GroupSolution> enumerate_cyclic_solutions(Modulus n);

/// g_ij = (1/n) sum_{k=0}^{n-1} eps_ik xi^{jk}, normalized; eps must be a
/// nonzero idempotent.
GroupSolution g_from_eps(const BinaryMatrix& m);

/// eps_ik = sum_j g(i,j) xi^{-jk}, certified to be exactly 0 or 1.
BinaryMatrix eps_from_g(const GroupSolution& g);

/**
 * The completeness bridge for cyclic groups: g_from_eps maps the nonzero
 * classified idempotent eps(d, t) onto the cyclic solution (d, t) (the
 * observed parameter correspondence), eps_from_g inverts it, and the sigma(n)
 * cyclic solutions are pairwise distinct — so the map is a bijection.
 */
CheckReport check_cyclic_bridge(Modulus n, int jobs = 1);

/// All subgroups of the group, each as a sorted element-index list.
std::vector<std::vector<std::int64_t>> enumerate_subgroups(const AbelianGroup& group);

/// All bimultiplicative pairings on a fixed pair of equal-order subgroups.
std::vector<SubgroupPairing> enumerate_pairings(const AbelianGroup& group,
                                                const std::vector<std::int64_t>& h1,
                                                const std::vector<std::int64_t>& h2);

} // namespace unityf
