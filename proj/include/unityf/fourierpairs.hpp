#pragma once

/**
 * @file fourierpairs.hpp
 * @brief Discrete Fourier pairs of {0,1}-matrices over Z_n x Z_n: exact
 *        idempotency via integer cyclic self-convolution, the classified
 *        solution family eps(d, t), Fourier partners certified in Z[xi_n],
 *        the row-shift operation, and enumeration (classified or brute force).
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unityf/cyclotomic.hpp"
#include "unityf/divlattice.hpp"
#include "unityf/errors.hpp"

namespace unityf {

/// Matrices are dense n x n; keep n at desk scale.
inline constexpr std::int64_t kMaxMatrixOrder = 4096;
/// Classified enumeration cap (sigma(n) + 1 matrices).
inline constexpr std::int64_t kMaxClassifiedOrder = 256;
/// Exhaustive enumeration default cap (2^{n^2} candidates); 5 is feasible.
inline constexpr std::int64_t kDefaultExhaustiveOrder = 4;
inline constexpr std::int64_t kMaxExhaustiveOrder = 5;

/// An n x n matrix with entries in {0,1}, row-major.
struct BinaryMatrix {
    explicit BinaryMatrix(Modulus n);
    BinaryMatrix(Modulus n, std::vector<std::uint8_t> entries);

    Modulus n;
    std::vector<std::uint8_t> a;

    std::uint8_t at(std::int64_t i, std::int64_t j) const {
        return a[static_cast<std::size_t>(i * n.value + j)];
    }
    void set(std::int64_t i, std::int64_t j, std::uint8_t v) {
        a[static_cast<std::size_t>(i * n.value + j)] = v;
    }
    std::int64_t total() const;

    bool operator==(const BinaryMatrix& other) const {
        return n.value == other.n.value && a == other.a;
    }
    /// Lexicographic on flattened rows; the canonical enumeration order.
    bool operator<(const BinaryMatrix& other) const { return a < other.a; }

    std::vector<std::string> rows() const;
    std::string to_text() const;
    static BinaryMatrix from_rows(std::int64_t n, const std::vector<std::string>& rows);
    static BinaryMatrix parse_text(const std::string& text);
};

/// The (d, t) naming a classified nonzero solution.
struct EpsParams {
    EpsParams(Modulus n, std::int64_t d, std::int64_t t);

    Modulus n;
    std::int64_t d;
    std::int64_t t;
};

/// Result of classifying an idempotent: the zero matrix is `trivial`, family
/// members carry their unique (d, t).
struct Classification {
    bool trivial = false;
    std::optional<EpsParams> params;
};

/// eps_ij = 1 iff (n/d) | i and d | (j - t * i/(n/d)).
BinaryMatrix build_eps(const EpsParams& p);

/// True iff the cyclic self-convolution over Z_n x Z_n equals n * m. Integers only.
bool is_idempotent(const BinaryMatrix& m);

/// Recover the unique (d, t) of a nonzero idempotent; requires is_idempotent.
Classification classify(const BinaryMatrix& m);

/// partner_kl = (1/n) sum_ij m_ij xi^{-(ik+jl)}, every entry certified to be
/// exactly 0 or n in Z[xi_n]; anything else throws NotBinaryPartner.
BinaryMatrix fourier_partner(const BinaryMatrix& m);

/// Row i = (n/d)s cyclically shifted right by t*s columns; rows off the
/// support of multiples of n/d must be zero.
BinaryMatrix shift(const BinaryMatrix& m, std::int64_t d, std::int64_t t);

/// Entry (i, j) -> (-i mod n, -j mod n); partner of partner equals this.
BinaryMatrix point_reflection(const BinaryMatrix& m);

BinaryMatrix transpose(const BinaryMatrix& m);

enum class EnumerationMode { classified, exhaustive };

/**
 * All {0,1} idempotents of order n, canonically sorted.
 *
 * classified: the zero matrix plus build_eps(n, d, t) for every d | n,
 * 0 <= t < d (1 + sigma(n) matrices). exhaustive: scan all 2^{n^2} binary
 * matrices, pruned by proof facts (total sum in {0, n}; entry (0,0) = 1 and
 * subgroup-indicator row 0 / column 0 for nonzero candidates), keeping the
 * ones that pass the integer idempotency test.
 */
std::vector<BinaryMatrix> enumerate_idempotents(Modulus n, EnumerationMode mode, int jobs = 1,
                                                std::int64_t max_exhaustive_order =
                                                    kDefaultExhaustiveOrder);

/// Unpruned reference scan (no structural filters), for validating the pruned
/// enumerator at very small n.
std::vector<BinaryMatrix> enumerate_idempotents_raw(Modulus n);

} // namespace unityf
