#include <doctest.h>

#include "test_support.hpp"

using namespace testsup;

// These tests drive the built binary; the harness exports LINCODE_CLI.

TEST_CASE("cli mindist on the [6,3] example") {
    auto r = run_cli("mindist " + example41_matrix_file());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("d = 3") != std::string::npos);
    CHECK(r.output.find("[1 1 1]") != std::string::npos);
    CHECK(r.output.find("[1 1 1 0 0 0]") != std::string::npos);
    CHECK(r.output.find("[1 0 0 1 1 0]") != std::string::npos);
    CHECK(r.output.find("j=3: 20 subsets") != std::string::npos);
}

TEST_CASE("cli mindist json has the stable keys") {
    auto r = run_cli("mindist --format json " + example41_matrix_file());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("\"d\": 3") != std::string::npos);
    CHECK(r.output.find("\"X\"") != std::string::npos);
    CHECK(r.output.find("\"Y\"") != std::string::npos);
    CHECK(r.output.find("\"levels\"") != std::string::npos);
}

TEST_CASE("cli decode and its exit codes") {
    auto path = example41_matrix_file();
    auto ok = run_cli("decode " + path + " 0,1,1,1,0,0");
    REQUIRE(ok.exit_code == 0);
    CHECK(ok.output.find("e = [0 0 0 0 1 0]") != std::string::npos);
    CHECK(ok.output.find("v = [0 1 1 1 1 0]") != std::string::npos);
    CHECK(ok.output.find("positions = 5") != std::string::npos);

    auto cw = run_cli("decode " + path + " 1,1,1,0,0,0");
    REQUIRE(cw.exit_code == 0);
    CHECK(cw.output.find("already a codeword") != std::string::npos);

    auto nd = run_cli("decode " + path + " 1,1,0,1,0,0");
    CHECK(nd.exit_code == 5);
    CHECK(nd.output.find("non-decodable") != std::string::npos);

    auto bad_d = run_cli("decode " + path + " 1,1,0,1,0,0 --d 9");
    CHECK(bad_d.exit_code == 6);
}

TEST_CASE("cli parse and degeneracy exit codes") {
    auto bad = write_temp("bad.matrix", "4 1 2\n1 0\n");
    CHECK(run_cli("mindist " + bad).exit_code == 2);

    auto degen = write_temp("degen.matrix", "2 2 2\n1 1\n1 1\n");
    CHECK(run_cli("mindist " + degen).exit_code == 3);

    CHECK(run_cli("mindist /no/such/file").exit_code == 2);
}

TEST_CASE("cli budget exit code") {
    auto r = run_cli("mindist --max-work 10 " + example41_matrix_file());
    CHECK(r.exit_code == 4);
}

TEST_CASE("cli gen-cyclic round-trips and feeds the other commands") {
    auto out = run_cli("gen-cyclic --g 1,0,1,1 --n 7 --q 2");
    REQUIRE(out.exit_code == 0);
    CHECK(out.output == "2 4 7\n"
                        "1 0 1 1 0 0 0\n"
                        "0 1 0 1 1 0 0\n"
                        "0 0 1 0 1 1 0\n"
                        "0 0 0 1 0 1 1\n");

    auto path = write_temp("cyclic.matrix", out.output);
    auto wd = run_cli("wdist " + path);
    REQUIRE(wd.exit_code == 0);
    CHECK(wd.output.find("3: 7") != std::string::npos);
    CHECK(wd.output.find("7: 1") != std::string::npos);
}

TEST_CASE("cli macwilliams-check") {
    auto r = run_cli("macwilliams-check " + example41_matrix_file());
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("identity holds") != std::string::npos);
}

TEST_CASE("cli oracle commands agree with the scan") {
    auto path = example42_matrix_file();
    auto o = run_cli("oracle-mindist " + path);
    REQUIRE(o.exit_code == 0);
    CHECK(o.output.find("d = 3") != std::string::npos);
    CHECK(o.output.find("(7)") != std::string::npos);

    auto od = run_cli("oracle-decode " + path + " 1,1,0,1,0,1,1");
    REQUIRE(od.exit_code == 0);
    CHECK(od.output.find("distance = 1") != std::string::npos);
    CHECK(od.output.find("[1 1 0 1 0 0 1]") != std::string::npos);
}

TEST_CASE("cli output is byte-identical across thread counts") {
    for (std::string cmd : {std::string("mindist "), std::string("decode ")}) {
        std::string args = cmd == "mindist " ? example42_matrix_file()
                                             : example42_matrix_file() +
                                                   " 1,1,0,1,0,1,1";
        auto a = run_cli(cmd + "--threads 1 " + args);
        auto b = run_cli(cmd + "--threads 8 " + args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}
