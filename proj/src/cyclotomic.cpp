#include "unityf/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "unityf/checked.hpp"

namespace unityf {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_power_minus_one(std::int64_t d) {
    if (d < 1) throw InvalidInput("x_power_minus_one: d must be positive");
    std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
    c.front() = -1;
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

std::int64_t IntPolynomial::coeff(std::int64_t k) const {
    if (k < 0 || k >= static_cast<std::int64_t>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::multiply(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) return IntPolynomial();
    std::vector<std::int64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            if (other.coeffs_[j] != 0)
                out[i + j] = checked_fma(coeffs_[i], other.coeffs_[j], out[i + j]);
    }
    return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divide_by_monic(
    const IntPolynomial& divisor) const {
    if (divisor.is_zero() || divisor.coeffs_.back() != 1)
        throw InvalidInput("divide_by_monic: divisor must be monic");
    const std::int64_t ddeg = divisor.degree();
    std::vector<std::int64_t> rem = coeffs_;
    if (degree() < ddeg) return {IntPolynomial(), IntPolynomial(std::move(rem))};
    std::vector<std::int64_t> quot(static_cast<std::size_t>(degree() - ddeg) + 1, 0);
    for (std::int64_t k = degree() - ddeg; k >= 0; --k) {
        const std::int64_t c = rem[static_cast<std::size_t>(k + ddeg)];
        if (c == 0) continue;
        quot[static_cast<std::size_t>(k)] = c;
        for (std::int64_t j = 0; j <= ddeg; ++j) {
            auto& slot = rem[static_cast<std::size_t>(k + j)];
            slot = checked_sub(slot, checked_mul(c, divisor.coeffs_[static_cast<std::size_t>(j)]));
        }
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

const IntPolynomial& cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw InvalidInput("cyclotomic_polynomial: n must be positive");
    if (n > kMaxCyclotomicOrder)
        throw CapExceeded("cyclotomic_polynomial: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxCyclotomicOrder));
    static std::mutex mutex;
    static std::map<std::int64_t, IntPolynomial> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    // Phi_n = prod_{d|n} (x^d - 1)^{mu(n/d)}: multiply the mu = +1 factors,
    // then one exact division by the product of the mu = -1 factors.
    IntPolynomial num(std::vector<std::int64_t>{1});
    IntPolynomial den(std::vector<std::int64_t>{1});
    for (std::int64_t d : divisors(n)) {
        const int mu = moebius(n / d);
        if (mu == 1) num = num.multiply(IntPolynomial::x_power_minus_one(d));
        else if (mu == -1) den = den.multiply(IntPolynomial::x_power_minus_one(d));
    }
    auto [quot, rem] = num.divide_by_monic(den);
    if (!rem.is_zero())
        throw Error("cyclotomic_polynomial: inexact division for n = " + std::to_string(n));
    if (quot.degree() != euler_phi(n))
        throw Error("cyclotomic_polynomial: degree mismatch for n = " + std::to_string(n));
    return cache.emplace(n, std::move(quot)).first->second;
}

CyclotomicElement::CyclotomicElement(Modulus order)
    : order_(order.value), coeffs_(static_cast<std::size_t>(order.value), 0) {
    if (order_ > kMaxCyclotomicOrder)
        throw CapExceeded("CyclotomicElement: order " + std::to_string(order_) +
                          " exceeds cap " + std::to_string(kMaxCyclotomicOrder));
}

CyclotomicElement::CyclotomicElement(Modulus order, std::vector<std::int64_t> coeffs)
    : CyclotomicElement(order) {
    if (coeffs.size() != static_cast<std::size_t>(order_))
        throw InvalidInput("CyclotomicElement: expected " + std::to_string(order_) +
                           " coefficients, got " + std::to_string(coeffs.size()));
    coeffs_ = std::move(coeffs);
}

CyclotomicElement CyclotomicElement::root_power(Modulus order, std::int64_t k,
                                                std::int64_t scale) {
    CyclotomicElement out(order);
    out.accumulate_root_power(k, scale);
    return out;
}

CyclotomicElement CyclotomicElement::integer(Modulus order, std::int64_t value) {
    return root_power(order, 0, value);
}

void CyclotomicElement::accumulate_root_power(std::int64_t k, std::int64_t scale) {
    const std::int64_t idx = ((k % order_) + order_) % order_;
    auto& slot = coeffs_[static_cast<std::size_t>(idx)];
    slot = checked_add(slot, scale);
}

CyclotomicElement CyclotomicElement::add(const CyclotomicElement& other) const {
    if (order_ != other.order_) throw InvalidInput("CyclotomicElement::add: order mismatch");
    CyclotomicElement out{Modulus(order_)};
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
    return out;
}

CyclotomicElement CyclotomicElement::sub(const CyclotomicElement& other) const {
    if (order_ != other.order_) throw InvalidInput("CyclotomicElement::sub: order mismatch");
    CyclotomicElement out{Modulus(order_)};
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = checked_sub(coeffs_[i], other.coeffs_[i]);
    return out;
}

CyclotomicElement CyclotomicElement::mul(const CyclotomicElement& other) const {
    if (order_ != other.order_) throw InvalidInput("CyclotomicElement::mul: order mismatch");
    CyclotomicElement out{Modulus(order_)};
    const std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (other.coeffs_[j] == 0) continue;
            std::size_t idx = i + j;
            if (idx >= n) idx -= n;
            out.coeffs_[idx] = checked_fma(coeffs_[i], other.coeffs_[j], out.coeffs_[idx]);
        }
    }
    return out;
}

CyclotomicElement CyclotomicElement::scale(std::int64_t factor) const {
    CyclotomicElement out{Modulus(order_)};
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = checked_mul(coeffs_[i], factor);
    return out;
}

bool CyclotomicElement::is_zero() const {
    bool all_zero = true;
    for (std::int64_t c : coeffs_)
        if (c != 0) { all_zero = false; break; }
    if (all_zero) return true;
    const auto& phi = cyclotomic_polynomial(order_);
    auto [quot, rem] = IntPolynomial(coeffs_).divide_by_monic(phi);
    (void)quot;
    return rem.is_zero();
}

bool CyclotomicElement::equals(const CyclotomicElement& other) const {
    return sub(other).is_zero();
}

std::optional<std::int64_t> CyclotomicElement::as_integer() const {
    // f(xi) = c  iff  f - c is divisible by Phi_N  iff  f mod Phi_N is the
    // constant c (deg Phi_N >= 1, so the residue determines c uniquely).
    const auto& phi = cyclotomic_polynomial(order_);
    auto [quot, rem] = IntPolynomial(coeffs_).divide_by_monic(phi);
    (void)quot;
    if (rem.is_zero()) return 0;
    if (rem.degree() == 0) return rem.coeff(0);
    return std::nullopt;
}

CyclotomicElement CyclotomicElement::reduced() const {
    const auto& phi = cyclotomic_polynomial(order_);
    auto [quot, rem] = IntPolynomial(coeffs_).divide_by_monic(phi);
    (void)quot;
    std::vector<std::int64_t> out(static_cast<std::size_t>(order_), 0);
    for (std::int64_t k = 0; k <= rem.degree(); ++k)
        out[static_cast<std::size_t>(k)] = rem.coeff(k);
    return CyclotomicElement(Modulus(order_), std::move(out));
}

double CyclotomicElement::real_part() const {
    const double tau = 6.283185307179586476925286766559;
    double acc = 0.0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            acc += static_cast<double>(coeffs_[j]) *
                   std::cos(tau * static_cast<double>(j) / static_cast<double>(order_));
    return acc;
}

double CyclotomicElement::imag_part() const {
    const double tau = 6.283185307179586476925286766559;
    double acc = 0.0;
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0)
            acc += static_cast<double>(coeffs_[j]) *
                   std::sin(tau * static_cast<double>(j) / static_cast<double>(order_));
    return acc;
}

} // namespace unityf
