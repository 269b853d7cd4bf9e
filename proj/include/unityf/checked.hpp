#pragma once

/**
 * @file checked.hpp
 * @brief Overflow-checked 64-bit arithmetic. The library keeps every exact
 *        computation inside int64_t; any operation that would wrap throws
 *        OverflowError instead of returning a wrong value.
 */

#include <cstdint>

#include "unityf/errors.hpp"

namespace unityf {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 add overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 sub overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 mul overflow");
    return r;
}

/// a*b + c in one checked step.
inline std::int64_t checked_fma(std::int64_t a, std::int64_t b, std::int64_t c) {
    return checked_add(checked_mul(a, b), c);
}

} // namespace unityf
