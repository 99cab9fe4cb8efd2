#pragma once

// Shared test machinery: deterministic random algebras (iterated generator
// products of small solvable seeds, scrambled by unimodular changes of
// basis) and independent oracles used to freeze expected values.

#include "liegen/liegen.hpp"

#include <vector>

namespace liegen::testing {

/// Product of random integer shears and transpositions; det = +-1, so the
/// inverse is integral and structure constants stay exact integers.
inline Matrix random_unimodular(Lcg& rng, int n) {
    Matrix p = Matrix::identity(n);
    const int steps = 2 * n;
    for (int s = 0; s < steps; ++s) {
        if (rng.coin() && n >= 2) {
            int i = static_cast<int>(rng.uniform(0, n - 1));
            int j = static_cast<int>(rng.uniform(0, n - 1));
            if (i == j) j = (j + 1) % n;
            const Rational c = Rational(rng.uniform(-2, 2));
            if (c != 0)
                for (int k = 0; k < n; ++k) p.at(i, k) += c * p.at(j, k);
        } else {
            const int i = static_cast<int>(rng.uniform(0, n - 1));
            const int j = static_cast<int>(rng.uniform(0, n - 1));
            p.swap_rows(i, j);
        }
    }
    return p;
}

inline LieAlgebra random_seed_algebra(Lcg& rng) {
    switch (rng.uniform(0, 4)) {
        case 0: return catalog::abelian(1);
        case 1: return catalog::abelian(2);
        case 2: return catalog::r2_aff();
        case 3: return build_rn(5);   // dim 3
        default: return catalog::heisenberg_h1();
    }
}

/// Solvable algebra of dimension <= max_dim built as an iterated generator
/// product, then scrambled by a random unimodular change of basis.
inline LieAlgebra random_solvable_algebra(Lcg& rng, int max_dim) {
    LieAlgebra g = random_seed_algebra(rng);
    for (int attempts = 0; attempts < 4; ++attempts) {
        const LieAlgebra h = random_seed_algebra(rng);
        const int m1 = betti1(g), m2 = betti1(h);
        if (g.dim + h.dim + m1 * m2 > max_dim) continue;
        g = rng.coin() ? generator_product(g, h).algebra : generator_product(h, g).algebra;
    }
    if (g.dim > 1) g = change_of_basis(g, random_unimodular(rng, g.dim), default_labels(g.dim));
    return g;
}

/// Exterior derivative of a constant-coefficient 2-form by the structure
/// rule d(p w_i ^ w_j) = p (dw_i ^ w_j - w_i ^ dw_j). Independent route to
/// the Jacobi identity: d(dw_k) = 0 for all k iff Jacobi holds.
inline Form d_two_form(const LieAlgebra& g, const Form& f) {
    const auto mc = maurer_cartan(g);
    Form out(g.dim, 3, f.vars);
    for (const auto& [idx, p] : f.coeffs) {
        const Form wi = basis_form(g.dim, {idx[0]}, f.vars);
        const Form wj = basis_form(g.dim, {idx[1]}, f.vars);
        out = out + p * (wedge(mc[idx[0]], wj) + Rational(-1) * wedge(wi, mc[idx[1]]));
    }
    return out;
}

/// Cyclic Jacobi residual computed straight from the constant table with
/// hand-rolled antisymmetry, independent of bracket().
inline std::vector<Rational> jacobi_residual_oracle(const LieAlgebra& g, int i, int j, int k) {
    std::vector<Rational> sum(g.dim);
    const auto lookup = [&](int a, int b, int m) -> Rational {
        if (a == b) return 0;
        const bool flip = a > b;
        if (flip) std::swap(a, b);
        const auto it = g.constants.find({a, b});
        if (it == g.constants.end()) return 0;
        const auto jt = it->second.find(m);
        if (jt == it->second.end()) return 0;
        return flip ? Rational(-jt->second) : jt->second;
    };
    const int triples[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
    for (const auto& t : triples)
        for (int m = 0; m < g.dim; ++m)
            for (int r = 0; r < g.dim; ++r)
                sum[r] += lookup(t[0], t[1], m) * lookup(m, t[2], r);
    return sum;
}

/// Exhaustive search for a coordinate-aligned direct-sum decomposition:
/// a basis-index bipartition into two nonzero ideals. Only for small dims.
inline bool has_coordinate_direct_sum(const LieAlgebra& g) {
    const int n = g.dim;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& [pair, vec] : g.constants) {
            const bool i_in = mask >> pair.first & 1, j_in = mask >> pair.second & 1;
            if (i_in != j_in) { ok = false; break; }   // cross bracket must vanish
            for (const auto& [k, c] : vec)
                if ((mask >> k & 1) != i_in) { ok = false; break; }
            if (!ok) break;
        }
        if (ok) return true;
    }
    return false;
}

/// Random sparse polynomial over the given universe.
inline Polynomial random_polynomial(Lcg& rng, const VarList& vars, int max_terms = 2, int max_deg = 1) {
    Polynomial p(vars);
    const int nterms = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < nterms; ++t) {
        Monomial m{std::vector<std::uint32_t>(vars->size(), 0)};
        for (std::size_t v = 0; v < vars->size(); ++v)
            m.exp[v] = static_cast<std::uint32_t>(rng.uniform(0, max_deg));
        p.add_term(m, Rational(rng.uniform(-3, 3)));
    }
    return p;
}

/// Random form of the given degree on an ambient space.
inline Form random_form(Lcg& rng, int ambient, int degree, const VarList& vars) {
    Form f(ambient, degree, vars);
    const int nterms = static_cast<int>(rng.uniform(1, 4));
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> idx;
        int cursor = 0;
        while (static_cast<int>(idx.size()) < degree && cursor < ambient) {
            const int remaining = ambient - cursor;
            const int needed = degree - static_cast<int>(idx.size());
            if (remaining == needed || rng.uniform(0, 1) == 0) idx.push_back(cursor);
            ++cursor;
        }
        if (static_cast<int>(idx.size()) == degree) f.add_term(idx, random_polynomial(rng, vars, 2, 1));
    }
    return f;
}

} // namespace liegen::testing
