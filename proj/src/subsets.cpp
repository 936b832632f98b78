#include "lincode/subsets.hpp"

#include <numeric>
#include <stdexcept>

namespace lincode {

std::uint64_t binomial(std::size_t n, std::size_t j) {
    if (j > n) return 0;
    if (j > n - j) j = n - j;
    unsigned __int128 result = 1;
    for (std::size_t i = 1; i <= j; ++i) {
        // result * (n-j+i) / i is exact at every step (it equals C(n-j+i, i)).
        result = result * (n - j + i) / i;
        if (result > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(result);
}

std::vector<std::size_t> first_combination(std::size_t j) {
    std::vector<std::size_t> c(j);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    std::size_t j = c.size();
    if (j == 0) return false;
    std::size_t i = j;
    while (i-- > 0) {
        if (c[i] < n - j + i) {
            ++c[i];
            for (std::size_t t = i + 1; t < j; ++t) c[t] = c[t - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t j,
                                            std::uint64_t r) {
    if (r >= binomial(n, j)) throw std::out_of_range("combination rank");
    std::vector<std::size_t> c(j);
    std::size_t next = 0;
    for (std::size_t i = 0; i < j; ++i) {
        // Count combinations starting with each candidate value.
        for (std::size_t v = next;; ++v) {
            std::uint64_t block = binomial(n - v - 1, j - i - 1);
            if (r < block) {
                c[i] = v;
                next = v + 1;
                break;
            }
            r -= block;
        }
    }
    return c;
}

} // namespace lincode
