#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Z[xi_N], xi_N = exp(2*pi*i/N).
 *
 * Elements are integer coefficient vectors of length N representing
 * sum_j c_j xi_N^j, i.e. Z[x]/(x^N - 1). Ring operations reduce mod x^N - 1;
 * equality with 0 is decided exactly by divisibility by the cyclotomic
 * polynomial Phi_N (monic, so long division stays in Z), and integer
 * recognition reads the remainder mod Phi_N directly. Floating point appears
 * only in the display helpers, never in a decision.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "unityf/divlattice.hpp"
#include "unityf/errors.hpp"

namespace unityf {

/// Largest root-of-unity order for which Phi_N is computed.
inline constexpr std::int64_t kMaxCyclotomicOrder = 5000;

/// Dense integer polynomial, coefficients low to high, no trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    /// x^d - 1.
    static IntPolynomial x_power_minus_one(std::int64_t d);

    /// Degree; -1 for the zero polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t coeff(std::int64_t k) const;
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    IntPolynomial multiply(const IntPolynomial& other) const;

    /// Long division by a monic divisor; exact in Z. Returns {quotient, remainder}.
    std::pair<IntPolynomial, IntPolynomial> divide_by_monic(const IntPolynomial& divisor) const;

    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<std::int64_t> coeffs_;
};

/// Phi_n via prod_{d|n} (x^d - 1)^{mu(n/d)}. Cached, thread safe. n <= kMaxCyclotomicOrder.
const IntPolynomial& cyclotomic_polynomial(std::int64_t n);

/// An element of Z[xi_N] stored as N coefficients on the powers xi_N^0..xi_N^{N-1}.
class CyclotomicElement {
public:
    /// The zero element of Z[xi_N].
    explicit CyclotomicElement(Modulus order);
    CyclotomicElement(Modulus order, std::vector<std::int64_t> coeffs);

    /// xi_N^k (k taken mod N), scaled by `scale`.
    static CyclotomicElement root_power(Modulus order, std::int64_t k, std::int64_t scale = 1);
    static CyclotomicElement integer(Modulus order, std::int64_t value);

    std::int64_t order() const { return order_; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    CyclotomicElement add(const CyclotomicElement& other) const;
    CyclotomicElement sub(const CyclotomicElement& other) const;
    CyclotomicElement mul(const CyclotomicElement& other) const;
    CyclotomicElement scale(std::int64_t factor) const;
    CyclotomicElement negate() const { return scale(-1); }

    /// In-place: *this += xi_N^k * scale. The workhorse of big exact sums.
    void accumulate_root_power(std::int64_t k, std::int64_t scale = 1);

    /// Exact: does the element equal 0 in Z[xi_N]? (Phi_N divides the carrier.)
    bool is_zero() const;

    /// Mathematical equality in Z[xi_N], not coefficient-vector equality.
    bool equals(const CyclotomicElement& other) const;

    /// If the element is a rational integer, return it (exactly certified).
    std::optional<std::int64_t> as_integer() const;

    /// The canonical representative: carrier replaced by its remainder mod
    /// Phi_N. Same element, minimal support; makes integer content meaningful.
    CyclotomicElement reduced() const;

    /// Numeric value of the carrier, for candidate proposal and display.
    double real_part() const;
    double imag_part() const;

private:
    std::int64_t order_;
    std::vector<std::int64_t> coeffs_;
};

} // namespace unityf
