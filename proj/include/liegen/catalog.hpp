#pragma once

// Built-in algebras used across tests, documentation, and the CLI.
// Parameterized families are addressed as abelian_N and rn_N.

#include "liegen/form.hpp"
#include "liegen/lie_algebra.hpp"
#include "liegen/genproduct.hpp"
#include "liegen/prodstruct.hpp"

#include <string>
#include <vector>

namespace liegen {

struct CatalogEntry {
    std::string name;
    LieAlgebra algebra;
    std::string provenance;
};

namespace catalog {

inline LieAlgebra abelian(int n) { return make_lie_algebra(n); }

inline LieAlgebra heisenberg_h1() {
    LieAlgebra g = make_lie_algebra(3, {"e1", "e2", "e3"});
    set_bracket(g, 0, 1, {{2, 1}});
    return g;
}

inline LieAlgebra r2_aff() {
    LieAlgebra g = make_lie_algebra(2);
    set_bracket(g, 0, 1, {{1, 1}});
    return g;
}

/// r4: [X0,X1] = X1, [X0,X2] = X1+X2, [X0,X3] = X2+X3 on {X0..X3}.
inline LieAlgebra r4() {
    LieAlgebra g = make_lie_algebra(4, {"X0", "X1", "X2", "X3"});
    set_bracket(g, 0, 1, {{1, 1}});
    set_bracket(g, 0, 2, {{1, 1}, {2, 1}});
    set_bracket(g, 0, 3, {{2, 1}, {3, 1}});
    return g;
}

/// r4_0: [X4,X5] = X6, [X4,X7] = X6 on {X4..X7}.
inline LieAlgebra r4_0() {
    LieAlgebra g = make_lie_algebra(4, {"X4", "X5", "X6", "X7"});
    set_bracket(g, 0, 1, {{2, 1}});
    set_bracket(g, 0, 3, {{2, 1}});
    return g;
}

/// The five-dimensional solvable algebra given by its Maurer-Cartan system
///   dw1 = w2^w3 + w1^w4
///   dw2 = w2^w4 - w2^w5
///   dw3 = w3^w5
///   dw4 = dw5 = 0
/// The brackets are reconstructed through mc_to_brackets, so the stored
/// table is exactly the one this library's sign convention induces.
inline LieAlgebra remark_5d() {
    const VarList none = no_vars();
    std::vector<Form> mc(5, Form(5, 2, none));
    const auto one = Polynomial::constant(none, 1);
    mc[0].add_term({1, 2}, one);    // w2^w3
    mc[0].add_term({0, 3}, one);    // w1^w4
    mc[1].add_term({1, 3}, one);    // w2^w4
    mc[1].add_term({1, 4}, -one);   // -w2^w5
    mc[2].add_term({2, 4}, one);    // w3^w5
    return mc_to_brackets(mc);
}

/// The ten-dimensional worked example: the r4 and r4_0 bracket tables on
/// {X0..X7} plus the two adjoined central elements [X0,X4] = X8,
/// [X0,X7] = X9. This is the literal example algebra; the faithful
/// generator product r4 x r4_0 is eleven-dimensional (b1(r4_0) = 3).
inline LieAlgebra example_10d() {
    std::vector<std::string> labels;
    for (int i = 0; i <= 9; ++i) labels.push_back("X" + std::to_string(i));
    LieAlgebra g = make_lie_algebra(10, labels);
    set_bracket(g, 0, 1, {{1, 1}});
    set_bracket(g, 0, 2, {{1, 1}, {2, 1}});
    set_bracket(g, 0, 3, {{2, 1}, {3, 1}});
    set_bracket(g, 4, 5, {{6, 1}});
    set_bracket(g, 4, 7, {{6, 1}});
    set_bracket(g, 0, 4, {{8, 1}});
    set_bracket(g, 0, 7, {{9, 1}});
    return g;
}

/// Product frame of example_10d: factors {X0..X3}, {X4..X7}, centrals X8, X9.
inline ProductFrame example_10d_frame() { return make_frame(example_10d(), 4, 4); }

inline std::vector<std::string> names() {
    return {"abelian_N",   "heisenberg_h1", "r2_aff",    "rn_N",
            "r4_paper",    "r4_0_paper",    "remark_5d", "paper_example_10d"};
}

inline CatalogEntry get(const std::string& name) {
    const auto parse_suffix = [&](const std::string& prefix) -> int {
        const std::string digits = name.substr(prefix.size());
        if (digits.empty()) throw input_error("catalog name '" + name + "' needs a numeric suffix");
        for (const char c : digits)
            if (c < '0' || c > '9') throw input_error("bad numeric suffix in catalog name '" + name + "'");
        return std::stoi(digits);
    };
    if (name.rfind("abelian_", 0) == 0) {
        const int n = parse_suffix("abelian_");
        return {name, abelian(n), "abelian algebra L_" + std::to_string(n)};
    }
    if (name.rfind("rn_", 0) == 0) {
        const int n = parse_suffix("rn_");
        return {name, build_rn(n), "solvable non-nilpotent family member r_" + std::to_string(n) +
                                       " of dimension " + std::to_string(n - 2)};
    }
    if (name == "heisenberg_h1") return {name, heisenberg_h1(), "Heisenberg algebra, [e1,e2] = e3"};
    if (name == "r2_aff") return {name, r2_aff(), "affine line algebra, [X1,X2] = X2"};
    if (name == "r4_paper") return {name, r4(), "solvable 4-dimensional algebra on {X0..X3}"};
    if (name == "r4_0_paper") return {name, r4_0(), "nilpotent 4-dimensional algebra on {X4..X7}"};
    if (name == "remark_5d")
        return {name, remark_5d(), "5-dimensional worked example, given by its Maurer-Cartan system"};
    if (name == "paper_example_10d")
        return {name, example_10d(), "10-dimensional worked example with two adjoined centrals"};
    throw input_error("unknown catalog name '" + name + "'");
}

} // namespace catalog
} // namespace liegen
