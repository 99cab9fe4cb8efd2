#include "liegen/form.hpp"
#include "liegen/catalog.hpp"
#include "test_support.hpp"

#include <catch2/catch.hpp>

using namespace liegen;

namespace {
Form w(int ambient, std::vector<int> idx) { return basis_form(ambient, idx, no_vars()); }
} // namespace

TEST_CASE("Maurer-Cartan forms of the basic algebras") {
    const auto mc = maurer_cartan(catalog::heisenberg_h1());
    REQUIRE(mc[0].is_zero());
    REQUIRE(mc[1].is_zero());
    REQUIRE(mc[2].coeffs.size() == 1);
    REQUIRE(mc[2].coeffs.at({0, 1}).constant_value() == -1);   // dw3 = -w1^w2

    for (const auto& f : maurer_cartan(catalog::abelian(4))) REQUIRE(f.is_zero());
}

TEST_CASE("wedge: repeated factors vanish, order flips sign, blocks merge") {
    REQUIRE(wedge(wedge(w(4, {0}), w(4, {1})), w(4, {0})).is_zero());
    REQUIRE(wedge(w(4, {1}), w(4, {0})) == Rational(-1) * wedge(w(4, {0}), w(4, {1})));
    const Form f = wedge(w(4, {0, 1}), w(4, {2, 3}));
    REQUIRE(f.coeffs.size() == 1);
    REQUIRE(f.coeffs.at({0, 1, 2, 3}).constant_value() == 1);
}

TEST_CASE("wedge powers") {
    const Form two = w(4, {0, 1}) + w(4, {2, 3});
    const Form sq = wedge_power(two, 2);
    REQUIRE(sq.coeffs.size() == 1);
    REQUIRE(sq.coeffs.at({0, 1, 2, 3}).constant_value() == 2);   // cross terms double

    const Form small = w(3, {0, 1}) + w(3, {1, 2});
    REQUIRE(wedge_power(small, 2).is_zero());   // degree exceeds the ambient dimension

    REQUIRE_THROWS_AS(wedge_power(w(4, {0}), 2), input_error);
}

TEST_CASE("wedge_power vanishes beyond half the ambient dimension") {
    Lcg rng(66);
    const VarList vars = make_indexed_vars("a", 2);
    for (int t = 0; t < 10; ++t) {
        const int ambient = static_cast<int>(rng.uniform(2, 6));
        const Form f = testing::random_form(rng, ambient, 2, vars);
        for (int j = ambient / 2 + 1; j <= ambient / 2 + 2; ++j) REQUIRE(wedge_power(f, j).is_zero());
    }
}

TEST_CASE("wedge is associative and graded-commutative") {
    Lcg rng(77);
    const VarList vars = make_indexed_vars("a", 2);
    for (int t = 0; t < 25; ++t) {
        const int ambient = static_cast<int>(rng.uniform(3, 6));
        const int da = static_cast<int>(rng.uniform(1, 2));
        const int db = static_cast<int>(rng.uniform(1, 2));
        const int dc = static_cast<int>(rng.uniform(1, 2));
        const Form a = testing::random_form(rng, ambient, da, vars);
        const Form b = testing::random_form(rng, ambient, db, vars);
        const Form c = testing::random_form(rng, ambient, dc, vars);
        REQUIRE(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        const Rational sign = (da * db) % 2 == 0 ? 1 : -1;
        REQUIRE(wedge(a, b) == sign * wedge(b, a));
    }
}

TEST_CASE("interior product normalization and slot signs") {
    const Form w12 = w(3, {0, 1});
    REQUIRE(interior_product(dense({{0, 1}}, 3), w12) == w(3, {1}));          // X1 -| w1^w2 = w2
    REQUIRE(interior_product(dense({{2, 1}}, 3), w12).is_zero());             // X3 -| w1^w2 = 0
    REQUIRE(interior_product(dense({{1, 1}}, 3), w12) == Rational(-1) * w(3, {0}));
    REQUIRE_THROWS_AS(interior_product({Rational(1)}, w12), input_error);
    Form scalar(3, 0, no_vars());
    scalar.add_term({}, Polynomial::constant(no_vars(), 1));
    REQUIRE_THROWS_AS(interior_product(dense({{0, 1}}, 3), scalar), input_error);
}

TEST_CASE("interior product is an antiderivation") {
    Lcg rng(88);
    const VarList vars = make_indexed_vars("a", 2);
    for (int t = 0; t < 25; ++t) {
        const int ambient = static_cast<int>(rng.uniform(3, 6));
        const int da = static_cast<int>(rng.uniform(1, 2));
        const Form a = testing::random_form(rng, ambient, da, vars);
        const Form b = testing::random_form(rng, ambient, static_cast<int>(rng.uniform(1, 2)), vars);
        std::vector<Rational> v(ambient);
        for (int i = 0; i < ambient; ++i) v[i] = Rational(rng.uniform(-2, 2));
        const Form lhs = interior_product(v, wedge(a, b));
        const Rational sign = da % 2 == 0 ? 1 : -1;
        const Form rhs = wedge(interior_product(v, a), b) + sign * wedge(a, interior_product(v, b));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("d^2 = 0 on every catalog algebra, and fails exactly when Jacobi does") {
    for (const char* name : {"abelian_3", "heisenberg_h1", "r2_aff", "rn_6", "r4_paper", "r4_0_paper",
                             "remark_5d", "paper_example_10d"}) {
        const auto g = catalog::get(name).algebra;
        const auto mc = maurer_cartan(g);
        for (int k = 0; k < g.dim; ++k) REQUIRE(testing::d_two_form(g, mc[k]).is_zero());
    }

    LieAlgebra bad = make_lie_algebra(3);
    set_bracket(bad, 0, 1, {{0, 1}});
    set_bracket(bad, 0, 2, {{1, 1}});
    const auto mc = maurer_cartan(bad);
    bool nonzero = false;
    for (int k = 0; k < 3; ++k) nonzero = nonzero || !testing::d_two_form(bad, mc[k]).is_zero();
    REQUIRE(nonzero);
}

TEST_CASE("bracket <-> Maurer-Cartan conversions are mutually inverse") {
    for (const char* name : {"heisenberg_h1", "r2_aff", "remark_5d", "r4_paper", "paper_example_10d"}) {
        const auto g = catalog::get(name).algebra;
        const auto back = mc_to_brackets(brackets_to_mc(g), g.labels);
        REQUIRE(back == g);
    }

    // dw3 = -w1^w2 comes back as [X1,X2] = X3.
    std::vector<Form> forms(3, Form(3, 2, no_vars()));
    forms[2].add_term({0, 1}, Polynomial::constant(no_vars(), -1));
    const auto g = mc_to_brackets(forms);
    REQUIRE(g.constants == catalog::heisenberg_h1().constants);

    Form nonconst(2, 2, make_indexed_vars("a", 1));
    nonconst.add_term({0, 1}, Polynomial::variable(make_indexed_vars("a", 1), 0));
    REQUIRE_THROWS_AS(mc_to_brackets({Form(2, 2, no_vars()), nonconst}), input_error);
}

TEST_CASE("constant 2-form rank agrees with wedge powers") {
    Lcg rng(12);
    for (int t = 0; t < 20; ++t) {
        const int ambient = static_cast<int>(rng.uniform(2, 7));
        const Form f = testing::random_form(rng, ambient, 2, no_vars());
        const int j0 = constant_form_j0(f);
        if (j0 > 0) REQUIRE_FALSE(wedge_power(f, j0).is_zero());
        REQUIRE((f.is_zero() || wedge_power(f, j0 + 1).is_zero()));
    }
}

TEST_CASE("forms print in the hand-written layout") {
    const auto lines = mc_system_strings(catalog::remark_5d());
    REQUIRE(lines[0] == "dw1 = w2^w3 + w1^w4");
    REQUIRE(lines[1] == "dw2 = w2^w4 - w2^w5");
    REQUIRE(lines[2] == "dw3 = w3^w5");
    REQUIRE(lines[3] == "dw4 = 0");
    REQUIRE(lines[4] == "dw5 = 0");
}
