#include "liegen/prodstruct.hpp"
#include "liegen/catalog.hpp"
#include "test_support.hpp"

#include <catch2/catch.hpp>

using namespace liegen;

namespace {
Matrix diag(std::vector<int> signs) {
    Matrix m(static_cast<int>(signs.size()), static_cast<int>(signs.size()));
    for (std::size_t i = 0; i < signs.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = signs[i];
    return m;
}
} // namespace

TEST_CASE("h1 with diag(1,-1,-1) is a clean product structure") {
    const auto ps = check_product_structure(catalog::heisenberg_h1(), diag({1, -1, -1}));
    REQUIRE(ps.report.involutive);
    REQUIRE(ps.report.nontrivial);
    REQUIRE(ps.report.automorphism);
    REQUIRE(ps.report.integrable);
    REQUIRE(ps.report.accepted);
    REQUIRE(ps.report.plus_dim == 1);
    REQUIRE(ps.report.minus_dim == 2);
    REQUIRE(ps.report.plus_closed);
    REQUIRE(ps.report.minus_closed);
    REQUIRE_FALSE(is_paracomplex(ps));
}

TEST_CASE("the identity is rejected as trivial") {
    const auto ps = check_product_structure(catalog::heisenberg_h1(), Matrix::identity(3));
    REQUIRE(ps.report.involutive);
    REQUIRE_FALSE(ps.report.nontrivial);
    REQUIRE_FALSE(ps.report.accepted);
}

TEST_CASE("r4 with diag(1,1,-1,-1): integrable but not an automorphism") {
    const auto ps = check_product_structure(catalog::r4(), diag({1, 1, -1, -1}));
    REQUIRE(ps.report.involutive);
    REQUIRE(ps.report.nontrivial);
    REQUIRE(ps.report.integrable);
    REQUIRE_FALSE(ps.report.automorphism);
    REQUIRE(ps.report.automorphism_failures == std::vector<std::pair<int, int>>{{0, 2}});
    REQUIRE(ps.report.accepted);
    REQUIRE(ps.report.plus_dim == 2);
    REQUIRE(ps.report.minus_dim == 2);
}

TEST_CASE("r4_0 with diag(1,1,-1,-1): both conditions fail on (X4,X5), reported") {
    const auto ps = check_product_structure(catalog::r4_0(), diag({1, 1, -1, -1}));
    REQUIRE(ps.report.involutive);
    REQUIRE_FALSE(ps.report.automorphism);
    REQUIRE_FALSE(ps.report.integrable);
    REQUIRE_FALSE(ps.report.accepted);
    REQUIRE(ps.report.automorphism_failures == std::vector<std::pair<int, int>>{{0, 1}});
    REQUIRE(ps.report.integrability_failures == std::vector<std::pair<int, int>>{{0, 1}});
    // g+ = span{X4, X5} is not closed: [X4,X5] = X6 lands in g-.
    REQUIRE(ps.report.plus_dim == 2);
    REQUIRE_FALSE(ps.report.plus_closed);
    REQUIRE(ps.report.minus_closed);
}

TEST_CASE("eigensplit of a diagonal involution on an abelian algebra") {
    const auto s = eigensplit(catalog::abelian(4), diag({1, -1, 1, -1}));
    REQUIRE(s.plus_basis.rows() == 2);
    REQUIRE(s.minus_basis.rows() == 2);
    REQUIRE(s.plus_closed);
    REQUIRE(s.minus_closed);
}

TEST_CASE("integrability alone already forces eigenspace closure") {
    Lcg rng(1212);
    for (const char* name : {"heisenberg_h1", "r4_paper", "remark_5d"}) {
        const auto g = catalog::get(name).algebra;
        for (int t = 0; t < 8; ++t) {
            std::vector<int> signs(g.dim);
            for (int i = 0; i < g.dim; ++i) signs[i] = rng.coin() ? 1 : -1;
            const auto ps = check_product_structure(g, diag(signs));
            if (ps.report.accepted) {
                REQUIRE(ps.report.plus_closed);
                REQUIRE(ps.report.minus_closed);
                REQUIRE(ps.report.plus_dim + ps.report.minus_dim == g.dim);
            }
        }
    }
}

TEST_CASE("product frame derivation and validation") {
    const auto frame = catalog::example_10d_frame();
    REQUIRE(frame.factor1 == std::vector<int>{0, 1, 2, 3});
    REQUIRE(frame.centrals == std::vector<int>{8, 9});
    REQUIRE(frame.cross == std::vector<std::array<int, 3>>{{0, 4, 8}, {0, 7, 9}});

    REQUIRE_THROWS_AS(make_frame(catalog::example_10d(), 3, 5), input_error);
    REQUIRE_THROWS_AS(make_frame(catalog::heisenberg_h1(), 2, 1), input_error);
}

TEST_CASE("extending the worked example: forced X8, free X9, dims (6,4)/(5,5)") {
    const auto frame = catalog::example_10d_frame();
    const std::vector<int> e1{1, 1, -1, -1}, e2{1, 1, -1, -1};

    const auto exts = enumerate_extensions(frame, e1, e2);
    REQUIRE(exts.size() == 2);
    REQUIRE(exts[0].structure.report.plus_dim == 6);
    REQUIRE(exts[0].structure.report.minus_dim == 4);
    REQUIRE(exts[1].structure.report.plus_dim == 5);
    REQUIRE(exts[1].structure.report.minus_dim == 5);
    REQUIRE_FALSE(is_paracomplex(exts[0].structure));
    REQUIRE(is_paracomplex(exts[1].structure));
    for (const auto& ext : exts) {
        REQUIRE(ext.structure.map.at(8, 8) == 1);   // forced: eps(X0) = eps(X4) = +1
        REQUIRE(ext.free_pairs == std::vector<std::pair<int, int>>{{0, 7}});
    }
    REQUIRE(exts[0].structure.map.at(9, 9) == 1);
    REQUIRE(exts[1].structure.map.at(9, 9) == -1);

    // Without a choice for the free pair the extension must refuse.
    REQUIRE_THROWS_AS(extend_to_product(frame, e1, e2), input_error);
    const auto one = extend_to_product(frame, e1, e2, {{{0, 7}, -1}});
    REQUIRE(one.structure.report.plus_dim == 5);
}

TEST_CASE("both sign choices are valid on L1 x L1") {
    const auto l1 = catalog::abelian(1);
    const auto frame = frame_of(generator_product(l1, l1));
    const auto exts = enumerate_extensions(frame, {1}, {-1});
    REQUIRE(exts.size() == 2);
    REQUIRE(exts[0].structure.report.accepted);
    REQUIRE(exts[1].structure.report.accepted);
    REQUIRE(exts[0].structure.report.plus_dim == 2);
    REQUIRE(exts[1].structure.report.plus_dim == 1);
}

TEST_CASE("same generator signs force the adjoined sign; mixed signs are free") {
    const auto r2 = catalog::r2_aff();
    const auto frame = frame_of(generator_product(r2, r2));

    const auto forced = enumerate_extensions(frame, {1, -1}, {1, -1});
    REQUIRE(forced.size() == 1);
    REQUIRE(forced[0].free_pairs.empty());
    REQUIRE(forced[0].structure.map.at(4, 4) == 1);   // E(Z) = +Z, the generators' sign
    REQUIRE(forced[0].structure.report.accepted);

    const auto free = enumerate_extensions(frame, {1, -1}, {-1, 1});
    REQUIRE(free.size() == 2);
    for (const auto& ext : free) REQUIRE(ext.structure.report.accepted);
    REQUIRE(free[0].structure.report.plus_dim == 3);
    REQUIRE(free[1].structure.report.plus_dim == 2);
}

TEST_CASE("extensions of the faithful r4 x r4_0 product") {
    const auto gp = generator_product(catalog::r4(), catalog::r4_0());
    const auto exts = enumerate_extensions(frame_of(gp), {1, 1, -1, -1}, {1, 1, -1, -1});
    REQUIRE(exts.size() == 2);   // pairs (X0,X4), (X0,X5) forced, (X0,X7) free
    REQUIRE(exts[0].structure.report.plus_dim == 7);
    REQUIRE(exts[0].structure.report.minus_dim == 4);
    REQUIRE(exts[1].structure.report.plus_dim == 6);
    REQUIRE(exts[1].structure.report.minus_dim == 5);
    for (const auto& ext : exts) {
        REQUIRE(ext.lambdas[0] == 1);
        REQUIRE(ext.lambdas[1] == 1);
    }
}

TEST_CASE("forced-sign rule read back from the matrix") {
    Lcg rng(515);
    const auto r2 = catalog::r2_aff();
    const auto h1 = catalog::heisenberg_h1();
    const auto frame = frame_of(generator_product(r2, h1));
    std::vector<int> pos1(frame.algebra.dim, -1), pos2(frame.algebra.dim, -1);
    for (std::size_t t = 0; t < frame.factor1.size(); ++t) pos1[frame.factor1[t]] = static_cast<int>(t);
    for (std::size_t t = 0; t < frame.factor2.size(); ++t) pos2[frame.factor2[t]] = static_cast<int>(t);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> e1(frame.factor1.size()), e2(frame.factor2.size());
        for (auto& s : e1) s = rng.coin() ? 1 : -1;
        for (auto& s : e2) s = rng.coin() ? 1 : -1;
        std::map<std::pair<int, int>, int> choices;
        for (const auto& [i, j, z] : frame.cross)
            if (e1[pos1[i]] != e2[pos2[j]]) choices[{i, j}] = rng.coin() ? 1 : -1;
        const auto ext = extend_to_product(frame, e1, e2, choices);
        for (const auto& [i, j, z] : frame.cross)
            if (e1[pos1[i]] == e2[pos2[j]])
                REQUIRE(ext.structure.map.at(z, z) == Rational(e1[pos1[i]]));
    }
}

TEST_CASE("paracomplex construction from matched factors") {
    const auto l2 = catalog::abelian(2);
    const auto p = build_paracomplex_product(l2, l2, 1);
    REQUIRE(p.structure.algebra.dim == 8);
    REQUIRE(p.structure.report.accepted);
    REQUIRE(p.structure.report.plus_dim == 4);
    REQUIRE(p.structure.report.minus_dim == 4);
    REQUIRE(is_paracomplex(p.structure));

    const auto h1 = catalog::heisenberg_h1();
    const auto q = build_paracomplex_product(h1, h1, 1);
    REQUIRE(q.structure.algebra.dim == 10);
    REQUIRE(q.structure.report.plus_dim == 5);
    REQUIRE(q.structure.report.minus_dim == 5);
    REQUIRE(q.structure.report.accepted);

    REQUIRE_THROWS_AS(build_paracomplex_product(l2, h1, 1), input_error);       // dims differ
    REQUIRE_THROWS_AS(build_paracomplex_product(l2, l2, 2), input_error);       // b1 != 2m
}

TEST_CASE("enumeration refuses blow-ups") {
    const auto l5 = catalog::abelian(5);
    const auto frame = frame_of(generator_product(l5, l5));
    REQUIRE_THROWS_AS(enumerate_extensions(frame, std::vector<int>(5, 1), std::vector<int>(5, -1)),
                      input_error);
}

TEST_CASE("extensions of genuinely valid diagonal inputs re-validate") {
    const auto r2 = catalog::r2_aff();
    // diag(1,-1) on r2 is involutive, nontrivial, integrable (and here even
    // an automorphism); its extensions must re-validate on the product.
    REQUIRE(check_product_structure(r2, diag({1, -1})).report.accepted);
    const auto frame = frame_of(generator_product(r2, r2));
    for (const auto& ext : enumerate_extensions(frame, {1, -1}, {1, -1})) {
        REQUIRE(ext.structure.report.accepted);
        REQUIRE(ext.structure.report.plus_dim + ext.structure.report.minus_dim == 5);
        REQUIRE(ext.structure.report.plus_closed);
        REQUIRE(ext.structure.report.minus_closed);
    }
}

TEST_CASE("sign vector validation") {
    const auto frame = frame_of(generator_product(catalog::abelian(1), catalog::abelian(1)));
    REQUIRE_THROWS_AS(extend_to_product(frame, {2}, {1}), input_error);
    REQUIRE_THROWS_AS(extend_to_product(frame, {1, 1}, {1}), input_error);
}
