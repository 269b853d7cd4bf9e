#pragma once

/**
 * @file errors.hpp
 * @brief Typed error hierarchy. Invalid inputs and arithmetic overflow throw,
 *        they never wrap around or assert.
 */

#include <stdexcept>
#include <string>

namespace unityf {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on an argument was violated (n = 0, non-divisor, bad params, ...).
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// A 64-bit intermediate would overflow.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what) : Error(what) {}
};

/// An enumeration size cap was exceeded.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// Reduction at an element/prime that occurs in no member of the system.
class EmptyReduction : public Error {
public:
    explicit EmptyReduction(const std::string& what) : Error(what) {}
};

/// An exact transform produced an entry that is not one of the two admissible
/// values; signals a precondition violation on the transformed object.
class NotBinaryPartner : public Error {
public:
    explicit NotBinaryPartner(const std::string& what) : Error(what) {}
};

} // namespace unityf
