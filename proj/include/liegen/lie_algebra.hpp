#pragma once

// Finite-dimensional Lie algebras over the rationals, given by sparse
// structure constants keyed on ordered pairs i < j. Antisymmetry is
// synthesized on read and never stored; the Jacobi identity is checkable
// exactly, and all structural series are computed as canonical RREF
// subspaces so comparisons are decidable.

#include "liegen/matrix.hpp"
#include "liegen/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace liegen {

/// Sparse coefficient vector: basis index -> coefficient, zeros never stored.
using SparseVec = std::map<int, Rational>;

struct LieAlgebra {
    int dim = 0;
    std::vector<std::string> labels;                       // basis names, used by files and reports
    std::map<std::pair<int, int>, SparseVec> constants;    // (i,j) with i<j, 0-based -> [X_i,X_j]

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.dim == b.dim && a.labels == b.labels && a.constants == b.constants;
    }
};

inline std::vector<std::string> default_labels(int n, const std::string& prefix = "X") {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline LieAlgebra make_lie_algebra(int dim, std::vector<std::string> labels = {}) {
    if (dim < 1) throw input_error("algebra dimension must be positive");
    LieAlgebra g;
    g.dim = dim;
    g.labels = labels.empty() ? default_labels(dim) : std::move(labels);
    if (static_cast<int>(g.labels.size()) != dim) throw input_error("label count does not match dimension");
    return g;
}

/// Declares [X_i, X_j] = v. Pairs are normalized to i < j with the sign
/// folded in; a zero vector erases the pair.
inline void set_bracket(LieAlgebra& g, int i, int j, SparseVec v) {
    if (i < 0 || j < 0 || i >= g.dim || j >= g.dim) throw input_error("bracket index out of range");
    for (const auto& [k, c] : v)
        if (k < 0 || k >= g.dim) throw input_error("bracket coefficient index out of range");
    Rational sign = 1;
    if (i == j) {
        for (const auto& [k, c] : v)
            if (c != 0) throw input_error("self-bracket must vanish");
        return;
    }
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    SparseVec w;
    for (const auto& [k, c] : v)
        if (c != 0) w[k] = sign * c;
    if (w.empty())
        g.constants.erase({i, j});
    else
        g.constants[{i, j}] = std::move(w);
}

/// [X_i, X_j] as a sparse vector, any index order.
inline SparseVec bracket_basis(const LieAlgebra& g, int i, int j) {
    if (i == j) return {};
    const Rational sign = i < j ? 1 : -1;
    const auto it = g.constants.find(i < j ? std::make_pair(i, j) : std::make_pair(j, i));
    if (it == g.constants.end()) return {};
    SparseVec out;
    for (const auto& [k, c] : it->second) out[k] = sign * c;
    return out;
}

inline std::vector<Rational> dense(const SparseVec& v, int n) {
    std::vector<Rational> out(n);
    for (const auto& [k, c] : v) out[k] = c;
    return out;
}

inline std::vector<Rational> unit_vector(int n, int i) {
    std::vector<Rational> out(n);
    out[i] = 1;
    return out;
}

/// Bilinear bracket of two coefficient vectors, expanded through the
/// structure constants.
inline std::vector<Rational> bracket(const LieAlgebra& g, const std::vector<Rational>& u,
                                     const std::vector<Rational>& v) {
    if (static_cast<int>(u.size()) != g.dim || static_cast<int>(v.size()) != g.dim)
        throw input_error("bracket operand has wrong dimension");
    std::vector<Rational> out(g.dim);
    for (const auto& [pair, vec] : g.constants) {
        const auto [i, j] = pair;
        const Rational coef = u[i] * v[j] - u[j] * v[i];
        if (coef == 0) continue;
        for (const auto& [k, c] : vec) out[k] += coef * c;
    }
    return out;
}

struct JacobiViolation {
    int i, j, k;                      // 0-based triple
    std::vector<Rational> residual;   // [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj]
};

struct JacobiReport {
    bool ok = true;
    std::vector<JacobiViolation> violations;
};

inline JacobiReport check_jacobi(const LieAlgebra& g) {
    JacobiReport report;
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j)
            for (int k = j + 1; k < g.dim; ++k) {
                std::vector<Rational> sum(g.dim);
                const int t[3][2] = {{i, j}, {j, k}, {k, i}};
                const int last[3] = {k, i, j};
                for (int s = 0; s < 3; ++s) {
                    const auto inner = bracket_basis(g, t[s][0], t[s][1]);
                    const auto outer = bracket(g, dense(inner, g.dim), unit_vector(g.dim, last[s]));
                    for (int m = 0; m < g.dim; ++m) sum[m] += outer[m];
                }
                bool zero = true;
                for (const auto& x : sum)
                    if (x != 0) { zero = false; break; }
                if (!zero) {
                    report.ok = false;
                    report.violations.push_back({i, j, k, sum});
                }
            }
    return report;
}

namespace detail {

/// Row space of all brackets [u, w], u over rows of a, w over rows of b.
inline Matrix bracket_span(const LieAlgebra& g, const Matrix& a, const Matrix& b) {
    Matrix rows(0, g.dim);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.rows(); ++j) {
            auto w = bracket(g, a.row(i), b.row(j));
            bool zero = true;
            for (const auto& x : w)
                if (x != 0) { zero = false; break; }
            if (!zero) rows.append_row(w);
        }
    return row_space(rows);
}

} // namespace detail

/// D^0 = g, D^{i+1} = [D^i, D^i]; list ends at the first zero or repeated term.
inline std::vector<Matrix> derived_series(const LieAlgebra& g) {
    std::vector<Matrix> series{Matrix::identity(g.dim)};
    while (true) {
        const Matrix next = detail::bracket_span(g, series.back(), series.back());
        const int prev_dim = series.back().rows();
        series.push_back(next);
        if (next.rows() == 0 || next.rows() == prev_dim) break;
    }
    return series;
}

/// C^0 = g, C^{i+1} = [g, C^i]; same termination rule.
inline std::vector<Matrix> lower_central_series(const LieAlgebra& g) {
    const Matrix full = Matrix::identity(g.dim);
    std::vector<Matrix> series{full};
    while (true) {
        const Matrix next = detail::bracket_span(g, full, series.back());
        const int prev_dim = series.back().rows();
        series.push_back(next);
        if (next.rows() == 0 || next.rows() == prev_dim) break;
    }
    return series;
}

/// Exact kernel of the joint adjoint action, as a canonical RREF basis.
inline Matrix center(const LieAlgebra& g) {
    // Constraint rows: for every j and k, sum_i x_i [X_i, X_j]_k = 0.
    Matrix constraints(g.dim * g.dim, g.dim);
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
            for (const auto& [k, c] : bracket_basis(g, i, j))
                constraints.at(j * g.dim + k, i) = c;
    return kernel(constraints);
}

inline Matrix derived_subalgebra(const LieAlgebra& g) {
    const Matrix full = Matrix::identity(g.dim);
    return detail::bracket_span(g, full, full);
}

inline int betti1(const LieAlgebra& g) { return g.dim - derived_subalgebra(g).rows(); }

/// Indices of basis vectors spanning g/[g,g], chosen greedily lowest-first.
inline std::vector<int> minimal_generators(const LieAlgebra& g) {
    Matrix span = derived_subalgebra(g);
    std::vector<int> gens;
    for (int i = 0; i < g.dim && span.rows() < g.dim; ++i) {
        const auto e = unit_vector(g.dim, i);
        if (contains_row(span, e)) continue;
        gens.push_back(i);
        span.append_row(e);
        span = row_space(span);
    }
    return gens;
}

struct SeriesReport {
    std::vector<int> derived_dims;
    std::vector<int> lower_central_dims;
    int center_dim = 0;
    int b1 = 0;
    bool solvable = false;
    int solvability_index = -1;   // smallest j with D^j = 0, -1 if none
    bool nilpotent = false;

    friend bool operator==(const SeriesReport&, const SeriesReport&) = default;
};

inline SeriesReport series_report(const LieAlgebra& g) {
    SeriesReport r;
    for (const auto& m : derived_series(g)) r.derived_dims.push_back(m.rows());
    for (const auto& m : lower_central_series(g)) r.lower_central_dims.push_back(m.rows());
    r.center_dim = center(g).rows();
    r.b1 = g.dim - r.derived_dims[1];
    r.solvable = r.derived_dims.back() == 0;
    if (r.solvable) r.solvability_index = static_cast<int>(r.derived_dims.size()) - 1;
    r.nilpotent = r.lower_central_dims.back() == 0;
    return r;
}

inline bool is_solvable(const LieAlgebra& g) { return series_report(g).solvable; }

/// New basis Y_a = sum_i P[i][a] X_i; P must be invertible.
inline LieAlgebra change_of_basis(const LieAlgebra& g, const Matrix& p,
                                  std::vector<std::string> labels = {}) {
    if (p.rows() != g.dim || p.cols() != g.dim) throw input_error("change-of-basis matrix has wrong size");
    const auto pinv = inverse(p);
    if (!pinv) throw input_error("change-of-basis matrix is singular");
    LieAlgebra out = make_lie_algebra(g.dim, labels.empty() ? g.labels : std::move(labels));
    for (int a = 0; a < g.dim; ++a)
        for (int b = a + 1; b < g.dim; ++b) {
            std::vector<Rational> ya(g.dim), yb(g.dim);
            for (int i = 0; i < g.dim; ++i) {
                ya[i] = p.at(i, a);
                yb[i] = p.at(i, b);
            }
            const auto w = matvec(*pinv, bracket(g, ya, yb));
            SparseVec sv;
            for (int k = 0; k < g.dim; ++k)
                if (w[k] != 0) sv[k] = w[k];
            if (!sv.empty()) set_bracket(out, a, b, sv);
        }
    return out;
}

/// True if the structure-constant tables agree entry-for-entry under the
/// basis map old index -> perm[old] with the given per-basis signs.
inline bool constants_match_under_map(const LieAlgebra& a, const LieAlgebra& b,
                                      const std::vector<int>& perm,
                                      const std::vector<Rational>& signs = {}) {
    if (a.dim != b.dim || static_cast<int>(perm.size()) != a.dim) return false;
    Matrix p(a.dim, a.dim);
    for (int i = 0; i < a.dim; ++i) p.at(perm[i], i) = signs.empty() ? Rational(1) : signs[i];
    // Columns of p express a's basis inside b; compare b's brackets pulled back.
    const auto pulled = change_of_basis(b, p, a.labels);
    return pulled.constants == a.constants;
}

} // namespace liegen
