#include <doctest.h>

#include <sstream>

#include "lincode/io.hpp"
#include "test_support.hpp"

using namespace lincode;

TEST_CASE("matrix files parse with comments and blank lines") {
    std::istringstream in(
        "# a [6,3] binary code\n"
        "\n"
        "2 3 6\n"
        "1 0 0 1 1 0\n"
        "0 1 0 1 0 1\n"
        "# trailing comment\n"
        "0 0 1 0 1 1\n");
    auto m = read_matrix(in);
    CHECK(m == testsup::example41_generator());
}

TEST_CASE("matrix parse errors") {
    auto expect_parse_error = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_matrix(in), parse_error);
    };
    expect_parse_error("");
    expect_parse_error("2 3\n1 0 0\n");                 // short header
    expect_parse_error("4 1 2\n1 0\n");                 // q not prime
    expect_parse_error("2 2 3\n1 0 1\n");               // missing row
    expect_parse_error("2 1 3\n1 0 1\n0 1 1\n");        // extra row
    expect_parse_error("2 1 3\n1 0\n");                 // short row
    expect_parse_error("3 1 3\n1 0 3\n");               // entry >= q
    expect_parse_error("2 1 3\n1 0 x\n");               // not an integer
}

TEST_CASE("write then read round-trips") {
    auto m = testsup::example42_generator();
    std::ostringstream out;
    write_matrix(out, m);
    std::istringstream in(out.str());
    CHECK(read_matrix(in) == m);
}

TEST_CASE("word parsing") {
    PrimeField f(2);
    CHECK(parse_word("0,1,1,1,0,0", f, 6) == Vec{0, 1, 1, 1, 0, 0});
    CHECK_THROWS_AS(parse_word("0,1,1", f, 6), parse_error);
    CHECK_THROWS_AS(parse_word("0,1,2,1,0,0", f, 6), parse_error);

    auto path = testsup::write_temp("word.txt", "0 1 1 1 0 0\n");
    CHECK(parse_word(path, f, 6) == Vec{0, 1, 1, 1, 0, 0});
}

TEST_CASE("vector formatting matches the report style") {
    CHECK(format_vec({0, 1, 1, 1, 1, 0}) == "[0 1 1 1 1 0]");
    CHECK(format_vec({}) == "[]");
}
