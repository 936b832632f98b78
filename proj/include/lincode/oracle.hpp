#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "lincode/code.hpp"

namespace lincode {

// Brute-force references. These are deliberately straight-line enumerations
// that share nothing with the scan-based algorithms beyond field arithmetic.

/// Number of codewords q^k, saturating at UINT64_MAX.
std::uint64_t codeword_count(const LinearCode& c);

/// Visit all q^k codewords, messages iterated in lexicographic order
/// (most significant coordinate first). Throws budget_exceeded when
/// q^k > budget.
void enumerate_codewords(const LinearCode& c, std::uint64_t budget,
                         const std::function<void(const Vec&)>& visit);

/// All codewords as a vector, message order.
std::vector<Vec> all_codewords(const LinearCode& c,
                               std::uint64_t budget = 1ull << 24);

struct OracleDistance {
    std::size_t d;
    std::vector<Vec> min_weight_codewords; // sorted lexicographically
};

/// Minimum nonzero codeword weight and the full set attaining it.
OracleDistance oracle_min_distance(const LinearCode& c,
                                   std::uint64_t budget = 1ull << 24);

/// Weight distribution of the row space of a matrix with independent rows
/// (e.g. a dual basis). A 0 x n matrix yields the zero code.
WeightDistribution span_weight_distribution(const FieldMatrix& basis,
                                            std::uint64_t budget = 1ull << 24);

struct NearestResult {
    std::size_t distance;
    std::vector<Vec> nearest; // all codewords at that distance, sorted
};

/// Exhaustive nearest-neighbor search. nearest.size() > 1 means the
/// nearest-neighbor decoding rule fails for w.
NearestResult oracle_nearest(const LinearCode& c, const Vec& w,
                             std::uint64_t budget = 1ull << 24);

} // namespace lincode
