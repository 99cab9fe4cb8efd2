#include "liegen/io.hpp"
#include "liegen/catalog.hpp"
#include "liegen/reports.hpp"
#include "test_support.hpp"

#include <catch2/catch.hpp>

using namespace liegen;

TEST_CASE("one-line files parse") {
    const auto g = parse_algebra("dim 3; [X1,X2]=X3");
    REQUIRE(g.dim == 3);
    REQUIRE(g.constants == catalog::heisenberg_h1().constants);
}

TEST_CASE("antisymmetric restatement is a duplicate declaration") {
    REQUIRE_THROWS_WITH(parse_algebra("dim 2; [X1,X2]=X2; [X2,X1]=X2"),
                        Catch::Matchers::Contains("antisymmetry"));
    REQUIRE_THROWS_WITH(parse_algebra("dim 3; [X1,X2]=X3; [X1,X2]=X3"),
                        Catch::Matchers::Contains("duplicate"));
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_algebra("dim 3\n[X1,X2] = X9\n");
        FAIL("expected a parse error");
    } catch (const input_error& e) {
        REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
        REQUIRE(std::string(e.what()).find("X9") != std::string::npos);
    }
    REQUIRE_THROWS_WITH(parse_algebra("[X1,X2]=X1"), Catch::Matchers::Contains("dim"));
    REQUIRE_THROWS_WITH(parse_algebra("dim 2\n[X1,X1]=X2"), Catch::Matchers::Contains("self-bracket"));
    REQUIRE_THROWS_WITH(parse_algebra("dim 2\n[X1,X2]=1/0*X2"), Catch::Matchers::Contains("denominator"));
    REQUIRE_THROWS_WITH(parse_algebra("dim 2\nbrackets\nd w1 = 0"), Catch::Matchers::Contains("mc"));
}

TEST_CASE("parser reports Jacobi violations with the offending triples") {
    try {
        parse_algebra("dim 3\n[X1,X2] = X1\n[X1,X3] = X2\n");
        FAIL("expected a Jacobi failure");
    } catch (const input_error& e) {
        const std::string msg = e.what();
        REQUIRE(msg.find("Jacobi") != std::string::npos);
        REQUIRE(msg.find("(X1,X2,X3)") != std::string::npos);
    }
}

TEST_CASE("the five-dimensional example parses from its unicode mc block") {
    const std::string omega = "\xCF\x89", wedge_ch = "\xE2\x88\xA7", minus_ch = "\xE2\x88\x92";
    const std::string text = "dim 5\nmc\n"
        "d " + omega + "1 = " + omega + "2" + wedge_ch + omega + "3 + " + omega + "1" + wedge_ch + omega + "4\n" +
        "d " + omega + "2 = " + omega + "2" + wedge_ch + omega + "4 " + minus_ch + " " + omega + "2" + wedge_ch + omega + "5\n" +
        "d " + omega + "3 = " + omega + "3" + wedge_ch + omega + "5\n" +
        "d " + omega + "4 = 0\n" +
        "d " + omega + "5 = 0\n";
    const auto g = parse_algebra(text);
    REQUIRE(g.constants == catalog::remark_5d().constants);
}

TEST_CASE("mc round trip through text") {
    for (const char* name : {"heisenberg_h1", "remark_5d", "r4_paper"}) {
        const auto g = catalog::get(name).algebra;
        REQUIRE(parse_algebra(emit_mc(g)) == g);
    }
    REQUIRE(parse_algebra("dim 3\nmc\n").constants.empty());   // all-zero forms: abelian
}

TEST_CASE("parse/emit round trip on the catalog and random algebras") {
    for (const char* name : {"abelian_1", "heisenberg_h1", "r2_aff", "rn_5", "r4_paper", "r4_0_paper",
                             "remark_5d", "paper_example_10d"}) {
        const auto g = catalog::get(name).algebra;
        REQUIRE(parse_algebra(emit_algebra(g)) == g);
    }
    Lcg rng(2025);
    for (int t = 0; t < 100; ++t) {
        const auto g = testing::random_solvable_algebra(rng, 7);
        REQUIRE(parse_algebra(emit_algebra(g)) == g);
    }
}

TEST_CASE("matrix files") {
    const Matrix d = parse_matrix("diag: 1 1 -1 -1", 4);
    REQUIRE(d.at(0, 0) == 1);
    REQUIRE(d.at(3, 3) == -1);
    REQUIRE(d.at(0, 1) == 0);

    const Matrix m = parse_matrix("# E\n0 1\n1 0\n", 2);
    REQUIRE(m.at(0, 1) == 1);
    REQUIRE(m.at(1, 0) == 1);

    REQUIRE_THROWS_AS(parse_matrix("1 2 3", 2), input_error);
    REQUIRE_THROWS_AS(parse_matrix("diag: 1 1", 3), input_error);
}

TEST_CASE("machine reports are deterministic byte-for-byte") {
    const auto g = catalog::remark_5d();
    const auto fp = fingerprint(g);
    const auto a = render_info(g, fp, OutputFormat::machine);
    const auto b = render_info(g, fp, OutputFormat::machine);
    REQUIRE(a == b);
    REQUIRE(a.find("N=1\n") != std::string::npos);
    REQUIRE(a.find("j0=2\n") != std::string::npos);
    REQUIRE(a.find("generators=X4,X5") != std::string::npos);

    const auto inv = invariant_report(g);
    const auto r1 = render_invariants(g, inv, 4, OutputFormat::machine);
    REQUIRE(r1 == render_invariants(g, inv, 4, OutputFormat::machine));
    REQUIRE(r1.find("N_rank=1\n") != std::string::npos);
    REQUIRE(r1.find("N_wedge=1\n") != std::string::npos);
    REQUIRE(r1.find("witness=dw1\n") != std::string::npos);
}

TEST_CASE("classify rendering matches the seven dimension-7 cases") {
    const auto text = render_types(enumerate_types(7), OutputFormat::machine);
    const std::string expected =
        "case=1 d1=5 m1=1 d2=1 m2=1 nilpotent=0\n"
        "case=2 d1=4 m1=1 d2=2 m2=1 nilpotent=0\n"
        "case=3 d1=3 m1=1 d2=3 m2=1 nilpotent=0\n"
        "case=4 d1=4 m1=2 d2=1 m2=1 nilpotent=0\n"
        "case=5 d1=3 m1=2 d2=2 m2=1 nilpotent=0\n"
        "case=6 d1=3 m1=1 d2=2 m2=2 nilpotent=0\n"
        "case=7 d1=3 m1=3 d2=1 m2=1 nilpotent=1\n";
    REQUIRE(text == expected);
}

TEST_CASE("labels survive the round trip") {
    const auto g = catalog::get("r4_0_paper").algebra;
    const std::string text = emit_algebra(g);
    REQUIRE(text.find("labels X4 X5 X6 X7") != std::string::npos);
    REQUIRE(parse_algebra(text).labels == g.labels);
}
