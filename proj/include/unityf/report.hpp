#pragma once

/**
 * @file report.hpp
 * @brief Result record for theorem-verification runs.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace unityf {

/// At most this many counterexamples are stored verbatim; `failed` counts all.
inline constexpr std::size_t kMaxStoredCounterexamples = 16;

/**
 * Outcome of an exhaustive or sampled check. Merging partial reports in
 * enumeration order yields the same record for any worker count.
 */
struct CheckReport {
    std::uint64_t tested = 0;
    std::uint64_t filters = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> counterexamples;

    void add_failure(const std::string& detail) {
        ++failed;
        if (counterexamples.size() < kMaxStoredCounterexamples)
            counterexamples.push_back(detail);
    }

    void merge(const CheckReport& other) {
        tested += other.tested;
        filters += other.filters;
        failed += other.failed;
        for (const auto& c : other.counterexamples)
            if (counterexamples.size() < kMaxStoredCounterexamples)
                counterexamples.push_back(c);
    }

    bool passed() const { return failed == 0; }

    /// Deterministic content digest (no timing data).
    std::string signature() const {
        std::string s = "tested=" + std::to_string(tested) +
                        ";filters=" + std::to_string(filters) +
                        ";failed=" + std::to_string(failed);
        for (const auto& c : counterexamples) s += ";cx=" + c;
        return s;
    }
};

} // namespace unityf
