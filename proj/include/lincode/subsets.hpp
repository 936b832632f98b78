#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace lincode {

/// C(n, j), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t j);

/// The first j-subset of {0, ..., n-1} in lexicographic order: (0, 1, ..., j-1).
std::vector<std::size_t> first_combination(std::size_t j);

/// Advance to the lexicographic successor. Returns false when c was the
/// last combination (n-j, ..., n-1).
bool next_combination(std::vector<std::size_t>& c, std::size_t n);

/// The combination of lexicographic rank r (0-based) among j-subsets of
/// {0, ..., n-1}. Requires r < C(n, j).
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t j,
                                            std::uint64_t r);

/// Lexicographic stream of all C(n, j) strictly increasing j-tuples.
class CombinationIterator {
public:
    CombinationIterator(std::size_t n, std::size_t j)
        : n_(n), current_(first_combination(j)), done_(j > n) {}

    bool done() const noexcept { return done_; }
    const std::vector<std::size_t>& current() const noexcept { return current_; }
    void advance() { done_ = !next_combination(current_, n_); }

private:
    std::size_t n_;
    std::vector<std::size_t> current_;
    bool done_;
};

} // namespace lincode
