#pragma once

// Counting coadjoint-representation invariants two independent ways:
//
//   N(g) = dim g - rank A(g),  A(g) = (C_ij^k x_k)      (symbolic rank)
//   N(g) = dim g - 2 j0(g)                               (wedge powers)
//
// where j0(g) is the largest j with the j-th wedge power of a generic
// element of span{dw_i} nonzero. The two routes share no code and are
// cross-checked throughout the test suite. Also: the additivity of j0
// over generator products together with the invariant-count sandwich.

#include "liegen/form.hpp"
#include "liegen/genproduct.hpp"
#include "liegen/lie_algebra.hpp"
#include "liegen/poly_matrix.hpp"
#include "liegen/polynomial.hpp"

#include <optional>
#include <vector>

namespace liegen {

/// A(g): the n x n skew matrix with entries sum_k C_ij^k x_k over x1..xn.
inline PolyMatrix coadjoint_matrix(const LieAlgebra& g) {
    const VarList xs = make_indexed_vars("x", g.dim);
    PolyMatrix m(g.dim, g.dim, xs);
    for (const auto& [pair, vec] : g.constants) {
        Polynomial entry(xs);
        for (const auto& [k, c] : vec) entry = entry + Polynomial::variable(xs, k) * c;
        m.entries[pair.first][pair.second] = entry;
        m.entries[pair.second][pair.first] = -entry;
    }
    return m;
}

inline int invariant_count_rank(const LieAlgebra& g) {
    return g.dim - symbolic_rank(coadjoint_matrix(g));
}

/// Result of the generic wedge-power computation. The certificate is the
/// lexicographically first nonzero coefficient of the j0-th power of the
/// generic form sum_i a_i dw_i; the witness is a small integer
/// specialization with the same j0, verified exactly.
struct GenericJ0 {
    int j0 = 0;
    Polynomial certificate;
    Form witness;
    std::vector<Rational> witness_coeffs;
};

namespace detail {

/// Deterministic witness search: supports of ascending size, positions in
/// lexicographic order, values odometer over {1,-1,2,-2,...}; accepts the
/// first vector on which the certificate coefficient stays nonzero.
inline std::optional<std::vector<Rational>> witness_search(const Polynomial& certificate, int n,
                                                           int max_magnitude) {
    std::vector<long long> values;
    for (int b = 1; b <= max_magnitude; ++b) {
        values.push_back(b);
        values.push_back(-b);
    }
    const int nv = static_cast<int>(values.size());
    std::vector<int> combo, digit;
    for (int s = 1; s <= n; ++s) {
        combo.assign(s, 0);
        for (int i = 0; i < s; ++i) combo[i] = i;
        while (true) {
            digit.assign(s, 0);
            while (true) {
                std::vector<Rational> c(n);
                for (int i = 0; i < s; ++i) c[combo[i]] = values[digit[i]];
                if (certificate.eval(c) != 0) return c;
                int pos = s - 1;
                while (pos >= 0 && digit[pos] == nv - 1) digit[pos--] = 0;
                if (pos < 0) break;
                ++digit[pos];
            }
            int pos = s - 1;
            while (pos >= 0 && combo[pos] == n - s + pos) --pos;
            if (pos < 0) break;
            ++combo[pos];
            for (int i = pos + 1; i < s; ++i) combo[i] = combo[i - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace detail

inline GenericJ0 generic_j0(const LieAlgebra& g) {
    GenericJ0 out;
    const VarList as = make_indexed_vars("a", g.dim);
    const auto mc = maurer_cartan(g, as);
    Form theta(g.dim, 2, as);
    for (int i = 0; i < g.dim; ++i) theta = theta + Polynomial::variable(as, i) * mc[i];
    out.certificate = Polynomial(as);
    out.witness = Form(g.dim, 0, as);
    if (theta.is_zero()) return out;   // abelian: j0 = 0, empty witness

    Form power = theta;
    int j = 1;
    while (true) {
        const Form next = wedge(power, theta);
        if (next.is_zero()) break;
        power = next;
        ++j;
    }
    out.j0 = j;
    out.certificate = power.coeffs.begin()->second;

    auto coeffs = detail::witness_search(out.certificate, g.dim, 2);
    for (int mag = 3; !coeffs && mag <= 10; ++mag)
        coeffs = detail::witness_search(out.certificate, g.dim, mag);
    if (!coeffs) throw std::logic_error("no witness specialization found");
    out.witness_coeffs = *coeffs;
    Form w(g.dim, 2, as);
    for (int i = 0; i < g.dim; ++i) w = w + (*coeffs)[i] * mc[i];
    out.witness = w;
    if (constant_form_j0(out.witness) != out.j0) throw std::logic_error("witness rank disagrees with j0");
    return out;
}

inline int invariant_count_wedge(const LieAlgebra& g) { return g.dim - 2 * generic_j0(g).j0; }

/// Everything the invariants report needs, both routes side by side.
struct InvariantReport {
    int dim = 0;
    int n_rank = 0;       // dim - rank A(g)
    int rank_a = 0;
    int j0 = 0;
    int n_wedge = 0;      // dim - 2 j0
    Polynomial generic_certificate;
    Form witness_form;
    std::vector<Rational> witness_coeffs;
};

inline InvariantReport invariant_report(const LieAlgebra& g) {
    InvariantReport r;
    r.dim = g.dim;
    r.rank_a = symbolic_rank(coadjoint_matrix(g));
    r.n_rank = g.dim - r.rank_a;
    const auto gj = generic_j0(g);
    r.j0 = gj.j0;
    r.n_wedge = g.dim - 2 * gj.j0;
    r.generic_certificate = gj.certificate;
    r.witness_form = gj.witness;
    r.witness_coeffs = gj.witness_coeffs;
    return r;
}

/// j0(g1 x g2) against j0(g1) + j0(g2) + j0(w) for the cross form
/// w = sum_{a in F, b in F'} w_a ^ w'_b, where F collects the factor-1
/// generators annihilating the factor-1 witness (F' likewise). Equality is
/// reported, not asserted; the invariant-count sandwich
/// m1*m2 <= N(g1 x g2) <= N(g1) + N(g2) + (m1*m2 - 2 j0(w)) is checked too.
struct ProductJ0Report {
    GeneratorProduct product;
    int j0_1 = 0, j0_2 = 0, j0_omega = 0;
    std::vector<int> f1, f2;   // qualifying generators, factor-local indices
    Form omega;
    int lhs = 0;               // j0 of the product, computed directly
    int rhs = 0;               // j0_1 + j0_2 + j0_omega
    bool equality = false;
    int m1m2 = 0, n1 = 0, n2 = 0, n_product = 0;
    bool lower_bound_ok = false, upper_bound_ok = false;
};

inline ProductJ0Report product_j0_report(const LieAlgebra& g1, const LieAlgebra& g2) {
    if (!is_solvable(g1) || !is_solvable(g2)) throw input_error("product j0 report needs solvable factors");
    ProductJ0Report r;
    r.product = generator_product(g1, g2);

    const auto w1 = generic_j0(g1);
    const auto w2 = generic_j0(g2);
    r.j0_1 = w1.j0;
    r.j0_2 = w2.j0;

    const auto annihilates = [](const GenericJ0& w, int dim, int alpha) {
        if (w.witness.degree == 0) return true;   // zero witness of an abelian factor
        return interior_product(unit_vector(dim, alpha), w.witness).is_zero();
    };
    for (const int a : r.product.gens1)
        if (annihilates(w1, g1.dim, a)) r.f1.push_back(a);
    for (const int b : r.product.gens2)
        if (annihilates(w2, g2.dim, b)) r.f2.push_back(b);

    const int n = r.product.algebra.dim;
    r.omega = Form(n, 2, no_vars());
    for (const int a : r.f1)
        for (const int b : r.f2)
            r.omega.add_term({r.product.embed1[a], r.product.embed2[b]}, Polynomial::constant(no_vars(), 1));
    if (!r.omega.is_zero()) {
        Form power = r.omega;
        r.j0_omega = 1;
        while (true) {
            const Form next = wedge(power, r.omega);
            if (next.is_zero()) break;
            power = next;
            ++r.j0_omega;
        }
    }

    r.lhs = generic_j0(r.product.algebra).j0;
    r.rhs = r.j0_1 + r.j0_2 + r.j0_omega;
    r.equality = r.lhs == r.rhs;

    r.m1m2 = static_cast<int>(r.product.centrals.size());
    r.n1 = g1.dim - 2 * r.j0_1;
    r.n2 = g2.dim - 2 * r.j0_2;
    r.n_product = n - 2 * r.lhs;
    r.lower_bound_ok = r.m1m2 <= r.n_product;
    r.upper_bound_ok = r.n_product <= r.n1 + r.n2 + (r.m1m2 - 2 * r.j0_omega);
    return r;
}

/// If both factors have no coadjoint invariants, the product has exactly
/// m1*m2 of them (the adjoined central coordinates).
struct ZeroInvariantProductCheck {
    bool applicable = false;
    bool holds = false;
    int n1 = 0, n2 = 0, n_product = 0, m1m2 = 0;
};

inline ZeroInvariantProductCheck zero_invariant_product_check(const LieAlgebra& g1, const LieAlgebra& g2) {
    ZeroInvariantProductCheck r;
    r.n1 = invariant_count_rank(g1);
    r.n2 = invariant_count_rank(g2);
    if (r.n1 != 0 || r.n2 != 0) return r;
    r.applicable = true;
    const GeneratorProduct gp = generator_product(g1, g2);
    r.m1m2 = static_cast<int>(gp.centrals.size());
    r.n_product = invariant_count_rank(gp.algebra);
    r.holds = r.n_product == r.m1m2;
    return r;
}

/// Isomorphism-invariant comparison record: structural series data plus the
/// invariant count and generic rank index. Equality is necessary, not
/// sufficient, for isomorphism.
struct Fingerprint {
    SeriesReport series;
    int invariant_count = 0;
    int j0 = 0;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline Fingerprint fingerprint(const LieAlgebra& g) {
    return {series_report(g), invariant_count_rank(g), generic_j0(g).j0};
}

} // namespace liegen
