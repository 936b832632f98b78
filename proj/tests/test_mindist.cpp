#include <doctest.h>

#include <random>

#include "lincode/mindist.hpp"
#include "lincode/oracle.hpp"
#include "test_support.hpp"

using namespace lincode;
using namespace testsup;

TEST_CASE("projective canonicalization") {
    PrimeField f5(5);
    CHECK(projective_canonical({0, 2, 4}, f5) == Vec{0, 1, 2});
    CHECK(projective_canonical({1, 3, 0}, f5) == Vec{1, 3, 0});
    CHECK_THROWS_AS(projective_canonical({0, 0}, f5), std::invalid_argument);
}

TEST_CASE("level scans of the [6,3] example") {
    auto code = example41();
    CHECK(level_scan(code, 1).empty());
    CHECK(level_scan(code, 2).empty());
    auto x = level_scan(code, 3);
    CHECK(as_set(x) == as_set({{1, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST_CASE("level scan of the [7,4] example finds the seven points") {
    auto x = level_scan(example42(), 3);
    CHECK(as_set(x) == as_set({{0, 0, 0, 1},
                               {0, 0, 1, 0},
                               {0, 1, 0, 0},
                               {0, 1, 1, 1},
                               {1, 0, 1, 1},
                               {1, 0, 0, 0},
                               {1, 1, 1, 0}}));
}

TEST_CASE("minimum distance of the worked examples") {
    auto r1 = min_distance(example41());
    CHECK(r1.d == 3);
    CHECK(r1.solutions.size() == 4);
    CHECK(as_set(r1.codewords) == as_set({{1, 1, 1, 0, 0, 0},
                                          {1, 0, 0, 1, 1, 0},
                                          {0, 1, 0, 1, 0, 1},
                                          {0, 0, 1, 0, 1, 1}}));
    REQUIRE(r1.levels.size() == 3);
    CHECK(r1.levels[0].subsets == 6);
    CHECK(r1.levels[1].subsets == 15);
    CHECK(r1.levels[2].subsets == 20);

    auto r2 = min_distance(example42());
    CHECK(r2.d == 3);
    CHECK(as_set(r2.codewords) == as_set(example42_min_weight_codewords()));
}

TEST_CASE("identity and repetition codes") {
    auto identity = LinearCode::create(FieldMatrix::from_rows(
        PrimeField(2), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    auto ri = min_distance(identity);
    CHECK(ri.d == 1);
    CHECK(as_set(ri.solutions) ==
          as_set({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(as_set(ri.codewords) == as_set(ri.solutions));

    auto rep = LinearCode::create(
        FieldMatrix::from_rows(PrimeField(2), {{1, 1, 1, 1}}));
    auto rr = min_distance(rep);
    CHECK(rr.d == 4);
    CHECK(rr.solutions == std::vector<Vec>{{1}});
    CHECK(rr.codewords == std::vector<Vec>{{1, 1, 1, 1}});
}

TEST_CASE("Y entries align with X and have weight d") {
    auto code = example42();
    auto r = min_distance(code);
    REQUIRE(r.solutions.size() == r.codewords.size());
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
        CHECK(r.codewords[i] == encode(code, r.solutions[i]));
        CHECK(weight(r.codewords[i]) == r.d);
        CHECK(is_codeword(code, r.codewords[i]));
    }
}

TEST_CASE("start_level soundness") {
    auto code = example42();
    auto base = min_distance(code);
    for (std::size_t s = 1; s <= base.d; ++s) {
        ScanOptions opts;
        opts.start_level = s;
        auto r = min_distance(code, opts);
        CHECK(r.d == base.d);
        CHECK(r.solutions == base.solutions);
        CHECK(r.codewords == base.codewords);
    }
    ScanOptions bad;
    bad.start_level = 0;
    CHECK_THROWS_AS(min_distance(code, bad), std::invalid_argument);
}

TEST_CASE("work budget fails loudly") {
    auto code = example41();
    ScanOptions opts;
    opts.max_work = 10; // level 2 needs 15 more evaluations
    CHECK_THROWS_AS(min_distance(code, opts), budget_exceeded);
}

TEST_CASE("thread counts do not change the report") {
    auto code = example42();
    ScanOptions one, eight;
    one.threads = 1;
    eight.threads = 8;
    auto a = min_distance(code, one);
    auto b = min_distance(code, eight);
    CHECK(a.d == b.d);
    CHECK(a.solutions == b.solutions);
    CHECK(a.codewords == b.codewords);
}

TEST_CASE("oracle equivalence on random codes") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t q = trial % 4 == 0 ? 3 : (trial % 4 == 1 ? 5 : 2);
        std::size_t k = 1 + rng() % 4;
        std::size_t n = k + rng() % 5;
        auto code = random_code(rng, q, k, n);

        auto report = min_distance(code);
        auto oracle = oracle_min_distance(code);
        CHECK(report.d == oracle.d);
        CHECK(report.d >= 1);
        CHECK(report.d <= n - k + 1);
        CHECK(projective_set(report.codewords, code.field()) ==
              projective_set(oracle.min_weight_codewords, code.field()));
        if (q == 2)
            CHECK(as_set(report.codewords) == as_set(oracle.min_weight_codewords));

        for (std::size_t j = 1; j < report.d; ++j)
            CHECK(level_scan(code, j).empty());
    }
}
