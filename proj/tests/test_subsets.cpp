#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "lincode/subsets.hpp"

using namespace lincode;

TEST_CASE("binomial") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(40, 20) == 137846528820ull);
    CHECK(binomial(200, 100) == UINT64_MAX); // saturates
}

TEST_CASE("lexicographic enumeration of C(4,2)") {
    std::vector<std::vector<std::size_t>> expected{{0, 1}, {0, 2}, {0, 3},
                                                   {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::vector<std::size_t>> got;
    for (CombinationIterator it(4, 2); !it.done(); it.advance())
        got.push_back(it.current());
    CHECK(got == expected);
}

TEST_CASE("j = 0 yields one empty tuple") {
    CombinationIterator it(5, 0);
    CHECK(!it.done());
    CHECK(it.current().empty());
    it.advance();
    CHECK(it.done());
}

TEST_CASE("counts match the binomial coefficient") {
    for (std::size_t n : {5, 6, 9}) {
        for (std::size_t j = 0; j <= n; ++j) {
            std::uint64_t count = 0;
            for (CombinationIterator it(n, j); !it.done(); it.advance()) ++count;
            CHECK(count == binomial(n, j));
        }
    }
}

TEST_CASE("unrank agrees with sequential enumeration") {
    std::size_t n = 9, j = 4;
    std::uint64_t r = 0;
    for (CombinationIterator it(n, j); !it.done(); it.advance(), ++r)
        CHECK(unrank_combination(n, j, r) == it.current());
    CHECK_THROWS_AS(unrank_combination(n, j, binomial(n, j)), std::out_of_range);
}
