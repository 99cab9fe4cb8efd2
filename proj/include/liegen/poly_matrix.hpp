#pragma once

// Matrices over a polynomial ring and their rank over the rational function
// field, computed by fraction-free (Bareiss) elimination. Every intermediate
// division is checked to be exact. A seeded random-evaluation rank is kept
// alongside as an independent oracle.

#include "liegen/matrix.hpp"
#include "liegen/polynomial.hpp"
#include "liegen/prng.hpp"

#include <vector>

namespace liegen {

struct PolyMatrix {
    int rows = 0, cols = 0;
    VarList vars;
    std::vector<std::vector<Polynomial>> entries;

    PolyMatrix() : vars(no_vars()) {}
    PolyMatrix(int r, int c, VarList v)
        : rows(r), cols(c), vars(v), entries(r, std::vector<Polynomial>(c, Polynomial(v))) {}
};

inline bool is_skew_symmetric(const PolyMatrix& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i; j < m.cols; ++j)
            if (!(m.entries[i][j] == -m.entries[j][i])) return false;
    return true;
}

/// Rank over the field of rational functions. Pivots are chosen per column
/// with minimal total degree (ties: lowest row), which keeps intermediate
/// swell low on the sparse matrices this library produces.
inline int symbolic_rank(PolyMatrix m) {
    int r = 0;
    Polynomial prev = Polynomial::constant(m.vars, 1);
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot_row = -1;
        int best_deg = 0;
        for (int i = r; i < m.rows; ++i) {
            if (m.entries[i][c].is_zero()) continue;
            const int d = m.entries[i][c].degree();
            if (pivot_row < 0 || d < best_deg) {
                pivot_row = i;
                best_deg = d;
            }
        }
        if (pivot_row < 0) continue;
        std::swap(m.entries[r], m.entries[pivot_row]);
        const Polynomial pivot = m.entries[r][c];
        for (int i = r + 1; i < m.rows; ++i) {
            for (int j = c + 1; j < m.cols; ++j)
                m.entries[i][j] = exact_div(m.entries[i][j] * pivot - m.entries[i][c] * m.entries[r][j], prev);
            m.entries[i][c] = Polynomial(m.vars);
        }
        prev = pivot;
        ++r;
    }
    return r;
}

/// Max rank over `trials` evaluations at pseudo-random integer points in
/// [-1000, 1000]. Lower-bounds the true rank; equals it with overwhelming
/// probability. Test oracle only.
inline int certified_random_rank(const PolyMatrix& m, int trials, std::uint64_t seed) {
    if (trials < 1) throw input_error("certified_random_rank needs at least one trial");
    Lcg rng(seed);
    const int nv = m.vars ? static_cast<int>(m.vars->size()) : 0;
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        std::vector<Rational> point(nv);
        for (int i = 0; i < nv; ++i) point[i] = Rational(rng.uniform(-1000, 1000));
        Matrix num(m.rows, m.cols);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) num.at(i, j) = m.entries[i][j].eval(point);
        best = std::max(best, rank(num));
    }
    return best;
}

} // namespace liegen
