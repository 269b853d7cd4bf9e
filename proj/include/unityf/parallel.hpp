#pragma once

/**
 * @file parallel.hpp
 * @brief Deterministic work partitioning and counter-based RNG.
 *
 * Reports must be byte-identical for any --jobs value, so work is split into
 * contiguous index ranges whose partial results are merged in range order, and
 * every random sample is a pure function of (seed, sample index), never of the
 * thread that happened to draw it.
 */

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

#include "unityf/errors.hpp"

namespace unityf {

/// splitmix64: tiny, fast, and good enough to steer property sampling.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw InvalidInput("next_below: bound must be positive");
        return next() % bound;
    }
};

/// Stream keyed by (seed, index): sample i is the same regardless of jobs.
inline SplitMix64 keyed_rng(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
    mixer.next();
    return mixer;
}

/// Contiguous [begin, end) ranges covering [0, total), at most `jobs` of them.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_ranges(std::uint64_t total,
                                                                         int jobs) {
    if (jobs < 1) throw InvalidInput("split_ranges: jobs must be positive");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    const std::uint64_t n_chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(jobs),
                                                           total == 0 ? 1 : total);
    std::uint64_t begin = 0;
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
        const std::uint64_t len = total / n_chunks + (c < total % n_chunks ? 1 : 0);
        ranges.emplace_back(begin, begin + len);
        begin += len;
    }
    return ranges;
}

/**
 * Run fn(begin, end) over split_ranges(total, jobs), one thread per range, and
 * return the partial results in range order. Exceptions propagate (the first
 * one in range order wins).
 */
template <typename Result, typename Fn>
std::vector<Result> run_chunked(std::uint64_t total, int jobs, Fn fn) {
    const auto ranges = split_ranges(total, jobs);
    std::vector<Result> results(ranges.size());
    std::vector<std::exception_ptr> errors(ranges.size());
    if (ranges.size() == 1) {
        results[0] = fn(ranges[0].first, ranges[0].second);
        return results;
    }
    std::vector<std::thread> threads;
    threads.reserve(ranges.size());
    for (std::size_t c = 0; c < ranges.size(); ++c) {
        threads.emplace_back([&, c]() {
            try {
                results[c] = fn(ranges[c].first, ranges[c].second);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

} // namespace unityf
