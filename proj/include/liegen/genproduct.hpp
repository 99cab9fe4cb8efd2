#pragma once

// The generator product of two Lie algebras: the central extension of
// g1 + g2 adjoining one central element Z_ab per pair of minimal
// generators, with the cocycle vanishing on the derived subalgebras.
// Also: the dimension identities of that extension, structural bounds,
// the r_n family, and the enumeration of decomposition types.

#include "liegen/lie_algebra.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

namespace liegen {

struct GeneratorProduct {
    LieAlgebra algebra;                 // basis order: g1, g2, Z_11, Z_12, ...
    std::vector<int> embed1, embed2;    // factor basis index -> product basis index
    std::vector<int> centrals;          // product indices of the adjoined elements
    std::vector<std::array<int, 3>> cocycle_support;   // (i, j, z) product indices with [X_i, X_j] = Z
    std::vector<int> gens1, gens2;      // minimal generators of the factors (factor indices)
    bool inputs_solvable = true;        // the structural identities are only claimed for solvable inputs
};

namespace detail {

inline std::string uniquified(std::string candidate, const std::set<std::string>& taken) {
    while (taken.count(candidate)) candidate += "'";
    return candidate;
}

} // namespace detail

inline GeneratorProduct generator_product(const LieAlgebra& g1, const LieAlgebra& g2) {
    for (const auto* g : {&g1, &g2}) {
        const auto jac = check_jacobi(*g);
        if (!jac.ok) throw input_error("generator product input violates the Jacobi identity");
    }
    GeneratorProduct gp;
    gp.gens1 = minimal_generators(g1);
    gp.gens2 = minimal_generators(g2);
    gp.inputs_solvable = is_solvable(g1) && is_solvable(g2);
    const int d1 = g1.dim, d2 = g2.dim;
    const int m1 = static_cast<int>(gp.gens1.size()), m2 = static_cast<int>(gp.gens2.size());
    const int n = d1 + d2 + m1 * m2;

    std::vector<std::string> labels = g1.labels;
    std::set<std::string> taken(labels.begin(), labels.end());
    for (const auto& l : g2.labels) {
        labels.push_back(detail::uniquified(l, taken));
        taken.insert(labels.back());
    }
    for (int z = 1; z <= m1 * m2; ++z) {
        labels.push_back(detail::uniquified("Z" + std::to_string(z), taken));
        taken.insert(labels.back());
    }

    gp.algebra = make_lie_algebra(n, labels);
    for (const auto& [pair, vec] : g1.constants) gp.algebra.constants[pair] = vec;
    for (const auto& [pair, vec] : g2.constants) {
        SparseVec shifted;
        for (const auto& [k, c] : vec) shifted[d1 + k] = c;
        gp.algebra.constants[{d1 + pair.first, d1 + pair.second}] = shifted;
    }
    for (int a = 0; a < m1; ++a)
        for (int b = 0; b < m2; ++b) {
            const int i = gp.gens1[a];
            const int j = d1 + gp.gens2[b];
            const int z = d1 + d2 + a * m2 + b;
            set_bracket(gp.algebra, i, j, SparseVec{{z, 1}});
            gp.cocycle_support.push_back({i, j, z});
        }

    for (int i = 0; i < d1; ++i) gp.embed1.push_back(i);
    for (int j = 0; j < d2; ++j) gp.embed2.push_back(d1 + j);
    for (int z = 0; z < m1 * m2; ++z) gp.centrals.push_back(d1 + d2 + z);
    return gp;
}

/// The four dimension identities of the extension, each evaluated exactly
/// and reported with the computed numbers. The raw center identity uses
/// dim Z(g_i); the refined variant replaces it by dim(Z(g_i) n D^1 g_i),
/// which is what the construction actually preserves when a factor has
/// central generators.
struct ExtensionIdentityReport {
    int b1_e = 0, b1_1 = 0, b1_2 = 0;
    bool b1_ok = false;
    int d1_e = 0, d1_1 = 0, d1_2 = 0, m1m2 = 0;
    bool d1_ok = false;
    std::vector<int> higher_e, higher_sum;   // dims of D^i for i >= 2, zero-padded
    bool higher_ok = false;
    int z_e = 0, z_1 = 0, z_2 = 0;
    bool z_ok = false;
    int zcap_1 = 0, zcap_2 = 0;
    bool z_refined_ok = false;
    bool all_four_ok = false;
    bool inputs_solvable = true;
};

inline ExtensionIdentityReport verify_extension_identities(const LieAlgebra& g1, const LieAlgebra& g2) {
    const GeneratorProduct gp = generator_product(g1, g2);
    ExtensionIdentityReport r;
    r.inputs_solvable = gp.inputs_solvable;
    r.m1m2 = static_cast<int>(gp.centrals.size());

    r.b1_1 = betti1(g1);
    r.b1_2 = betti1(g2);
    r.b1_e = betti1(gp.algebra);
    r.b1_ok = r.b1_e == r.b1_1 + r.b1_2;

    const auto ds_e = derived_series(gp.algebra);
    const auto ds_1 = derived_series(g1);
    const auto ds_2 = derived_series(g2);
    const auto dim_at = [](const std::vector<Matrix>& s, std::size_t i) {
        return i < s.size() ? s[i].rows() : s.back().rows();
    };
    r.d1_1 = dim_at(ds_1, 1);
    r.d1_2 = dim_at(ds_2, 1);
    r.d1_e = dim_at(ds_e, 1);
    r.d1_ok = r.d1_e == r.d1_1 + r.d1_2 + r.m1m2;

    const std::size_t depth = std::max({ds_e.size(), ds_1.size(), ds_2.size()});
    r.higher_ok = true;
    for (std::size_t i = 2; i < depth; ++i) {
        r.higher_e.push_back(dim_at(ds_e, i));
        r.higher_sum.push_back(dim_at(ds_1, i) + dim_at(ds_2, i));
        if (r.higher_e.back() != r.higher_sum.back()) r.higher_ok = false;
    }

    const Matrix z1 = center(g1), z2 = center(g2);
    r.z_1 = z1.rows();
    r.z_2 = z2.rows();
    r.z_e = center(gp.algebra).rows();
    r.z_ok = r.z_e == r.z_1 + r.z_2 + r.m1m2;
    r.zcap_1 = intersection_dim(z1, ds_1[1]);
    r.zcap_2 = intersection_dim(z2, ds_2[1]);
    r.z_refined_ok = r.z_e == r.zcap_1 + r.zcap_2 + r.m1m2;

    r.all_four_ok = r.b1_ok && r.d1_ok && r.higher_ok && r.z_ok;
    return r;
}

/// Structural bounds satisfied by every generator product:
/// dim[g,g] <= dim g - 2, dim Z(g) >= 1, dim g >= 3.
struct ProductBoundsReport {
    int dim = 0, derived_dim = 0, center_dim = 0;
    bool derived_ok = false, center_ok = false, dim_ok = false, all_ok = false;
};

inline ProductBoundsReport product_bounds_report(const LieAlgebra& g) {
    ProductBoundsReport r;
    r.dim = g.dim;
    r.derived_dim = derived_subalgebra(g).rows();
    r.center_dim = center(g).rows();
    r.derived_ok = r.derived_dim <= r.dim - 2;
    r.center_ok = r.center_dim >= 1;
    r.dim_ok = r.dim >= 3;
    r.all_ok = r.derived_ok && r.center_ok && r.dim_ok;
    return r;
}

/// Observed solvability index of g1 x g2 next to the claimed max(j1, j2).
/// Reported, not asserted: L1 x L1 already has index 2 > max(1, 1).
struct SolvabilityIndexReport {
    int observed = -1;
    int max_of_factors = -1;
    bool matches = false;
};

inline SolvabilityIndexReport solvability_index_report(const LieAlgebra& g1, const LieAlgebra& g2) {
    const auto r1 = series_report(g1), r2 = series_report(g2);
    if (!r1.solvable || !r2.solvable) throw input_error("solvability index needs solvable factors");
    const GeneratorProduct gp = generator_product(g1, g2);
    SolvabilityIndexReport out;
    out.observed = series_report(gp.algebra).solvability_index;
    out.max_of_factors = std::max(r1.solvability_index, r2.solvability_index);
    out.matches = out.observed == out.max_of_factors;
    return out;
}

/// The solvable non-nilpotent family r_n on basis {X1..X_{n-2}} with
/// [X1, Xj] = Xj for 2 <= j <= n-2. Defined for n >= 4; n = 3 degenerates
/// to the 1-dimensional abelian algebra and is rejected.
inline LieAlgebra build_rn(int n) {
    if (n < 4) throw input_error("r_n requires n >= 4");
    LieAlgebra g = make_lie_algebra(n - 2);
    for (int j = 1; j < n - 2; ++j) set_bracket(g, 0, j, SparseVec{{j, 1}});
    return g;
}

/// r_n x L1: a solvable non-nilpotent algebra of dimension n with b1 = 2.
inline GeneratorProduct build_rn_product(int n) {
    const LieAlgebra rn = build_rn(n);
    const LieAlgebra l1 = make_lie_algebra(1, {"Y1"});
    return generator_product(rn, l1);
}

/// One decomposition type (d_i, m_i) = (dim g_i, b1(g_i)) of a product of
/// total dimension d1 + d2 + m1*m2.
struct DecompositionType {
    int d1 = 0, m1 = 0, d2 = 0, m2 = 0;
    bool forces_nilpotent = false;   // m_i = d_i on both sides: abelian factors

    friend bool operator==(const DecompositionType&, const DecompositionType&) = default;
};

/// All unordered types with d1 + d2 + m1*m2 = n, listed grouped by
/// b1 = m1 + m2 ascending, then d1 descending, then m1 descending.
inline std::vector<DecompositionType> enumerate_types(int n) {
    std::vector<DecompositionType> out;
    for (int d1 = 1; d1 <= n; ++d1)
        for (int d2 = 1; d2 <= d1; ++d2)
            for (int m1 = 1; m1 <= d1; ++m1)
                for (int m2 = 1; m2 <= d2; ++m2) {
                    if (d1 == d2 && m1 < m2) continue;
                    if (d1 + d2 + m1 * m2 != n) continue;
                    out.push_back({d1, m1, d2, m2, m1 == d1 && m2 == d2});
                }
    std::sort(out.begin(), out.end(), [](const DecompositionType& a, const DecompositionType& b) {
        if (a.m1 + a.m2 != b.m1 + b.m2) return a.m1 + a.m2 < b.m1 + b.m2;
        if (a.d1 != b.d1) return a.d1 > b.d1;
        return a.m1 > b.m1;
    });
    return out;
}

inline std::vector<DecompositionType> enumerate_dim7_types() { return enumerate_types(7); }

/// Signed permutation realizing g1 x g2 = g2 x g1: factors swap and each
/// Z_ab maps to -Z'_ba.
inline Matrix swap_isomorphism(const GeneratorProduct& gp) {
    const int d1 = static_cast<int>(gp.embed1.size());
    const int d2 = static_cast<int>(gp.embed2.size());
    const int m1 = static_cast<int>(gp.gens1.size());
    const int m2 = static_cast<int>(gp.gens2.size());
    const int n = gp.algebra.dim;
    Matrix p(n, n);
    for (int i = 0; i < d1; ++i) p.at(d2 + i, i) = 1;
    for (int j = 0; j < d2; ++j) p.at(j, d1 + j) = 1;
    for (int a = 0; a < m1; ++a)
        for (int b = 0; b < m2; ++b)
            p.at(d1 + d2 + b * m1 + a, d1 + d2 + a * m2 + b) = -1;
    return p;
}

} // namespace liegen
