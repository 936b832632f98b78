#pragma once

#include <cstdint>
#include <thread>
#include <vector>

#include "lincode/code.hpp"
#include "lincode/subsets.hpp"

namespace lincode {

/// Scale a nonzero vector so its first nonzero coordinate is 1 (a no-op
/// over GF(2)). Canonical representative of the projective point.
Vec projective_canonical(Vec v, const PrimeField& f);

struct ScanOptions {
    std::size_t start_level = 1;       // caller-asserted lower bound on d
    std::uint64_t max_work = 100'000'000; // cap on cumulative subset evaluations
    std::size_t max_points = 1u << 20; // cap on |X| at one level
    unsigned threads = 0;              // 0 = hardware concurrency
};

struct LevelStat {
    std::size_t level;          // j
    std::uint64_t subsets;      // C(n, j), the level always completes
};

struct DistanceReport {
    std::size_t d;
    std::vector<Vec> solutions;       // X: canonical projective points, sorted
    std::vector<Vec> codewords;       // Y: codewords[i] = solutions[i] * G
    std::vector<LevelStat> levels;    // one entry per scanned level
};

/// All projective points x with x M_S = 0 for some j-subset S of deleted
/// columns, where M_S is G without the columns in S. Deduplicated union over
/// every j-subset, sorted lexicographically.
std::vector<Vec> level_scan(const LinearCode& c, std::size_t j,
                            const ScanOptions& opts = {});

/// Exhaustive column-deletion scan: levels j = start_level .. n-k+1 in
/// order; the first level with solutions gives d, the complete projective
/// solution set X and the complete set Y of weight-d codewords (up to
/// scalars). Throws budget_exceeded when the cumulative subset count would
/// pass max_work.
DistanceReport min_distance(const LinearCode& c, const ScanOptions& opts = {});

namespace detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace detail

} // namespace lincode
