#pragma once

// Product structures: involutions E != +-id of a Lie algebra together with
// the integrability identity
//
//     E[X,Y] = [E(X),Y] + [X,E(Y)] - E[E(X),E(Y)]
//
// and the eigenspace splitting g = g+ (+) g-. Whether such an E must also
// be an automorphism is ambiguous in practice, so both verdicts are
// evaluated exactly and reported; acceptance keys on integrability, which
// is the condition that forces the sign rules on adjoined central elements
// of a generator product and makes both eigenspaces subalgebras.

#include "liegen/genproduct.hpp"
#include "liegen/lie_algebra.hpp"
#include "liegen/matrix.hpp"

#include <array>
#include <map>
#include <utility>
#include <vector>

namespace liegen {

struct ProductStructureReport {
    bool involutive = false;
    bool nontrivial = false;      // E != +-id
    bool automorphism = false;    // E[X,Y] = [EX,EY] on all basis pairs
    bool integrable = false;      // the identity above on all basis pairs
    bool accepted = false;        // involutive && nontrivial && integrable
    std::vector<std::pair<int, int>> automorphism_failures;
    std::vector<std::pair<int, int>> integrability_failures;
    int plus_dim = 0, minus_dim = 0;
    bool plus_closed = false, minus_closed = false;
};

struct ProductStructure {
    LieAlgebra algebra;
    Matrix map;                 // E in the algebra's basis
    Matrix plus_basis, minus_basis;
    ProductStructureReport report;
};

struct EigenSplit {
    Matrix plus_basis, minus_basis;
    bool plus_closed = false, minus_closed = false;
};

namespace detail {

inline bool subspace_closed(const LieAlgebra& g, const Matrix& basis) {
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = i + 1; j < basis.rows(); ++j)
            if (!contains_row(basis, bracket(g, basis.row(i), basis.row(j)))) return false;
    return true;
}

} // namespace detail

/// Exact +1 / -1 eigenspaces of an involution, each checked for closure
/// under the bracket. Works for any square matrix; non-involutions just get
/// whatever kernels fall out.
inline EigenSplit eigensplit(const LieAlgebra& g, const Matrix& emap) {
    EigenSplit s;
    Matrix minus_id = emap, plus_id = emap;
    for (int i = 0; i < g.dim; ++i) {
        minus_id.at(i, i) -= 1;
        plus_id.at(i, i) += 1;
    }
    s.plus_basis = kernel(minus_id);    // E v = v
    s.minus_basis = kernel(plus_id);    // E v = -v
    s.plus_closed = detail::subspace_closed(g, s.plus_basis);
    s.minus_closed = detail::subspace_closed(g, s.minus_basis);
    return s;
}

/// Evaluates every product-structure condition exactly and reports each
/// verdict; nothing is an error, failures are report entries.
inline ProductStructure check_product_structure(const LieAlgebra& g, const Matrix& emap) {
    if (emap.rows() != g.dim || emap.cols() != g.dim) throw input_error("structure matrix has wrong size");
    ProductStructure ps;
    ps.algebra = g;
    ps.map = emap;
    auto& r = ps.report;

    r.involutive = emap * emap == Matrix::identity(g.dim);

    bool is_plus = true, is_minus = true;
    const Matrix id = Matrix::identity(g.dim);
    for (int i = 0; i < g.dim && (is_plus || is_minus); ++i)
        for (int j = 0; j < g.dim; ++j) {
            if (emap.at(i, j) != id.at(i, j)) is_plus = false;
            if (emap.at(i, j) != -id.at(i, j)) is_minus = false;
        }
    r.nontrivial = !is_plus && !is_minus;

    r.automorphism = true;
    r.integrable = true;
    for (int i = 0; i < g.dim; ++i)
        for (int j = i + 1; j < g.dim; ++j) {
            const auto ei = unit_vector(g.dim, i), ej = unit_vector(g.dim, j);
            const auto eei = matvec(emap, ei), eej = matvec(emap, ej);
            const auto lie = bracket(g, ei, ej);
            const auto e_lie = matvec(emap, lie);
            const auto lie_ee = bracket(g, eei, eej);
            if (e_lie != lie_ee) {
                r.automorphism = false;
                r.automorphism_failures.push_back({i, j});
            }
            // E[X,Y] - [EX,Y] - [X,EY] + E[EX,EY] = 0
            const auto t1 = bracket(g, eei, ej);
            const auto t2 = bracket(g, ei, eej);
            const auto t3 = matvec(emap, lie_ee);
            bool ok = true;
            for (int k = 0; k < g.dim; ++k)
                if (e_lie[k] - t1[k] - t2[k] + t3[k] != 0) { ok = false; break; }
            if (!ok) {
                r.integrable = false;
                r.integrability_failures.push_back({i, j});
            }
        }

    const EigenSplit split = eigensplit(g, emap);
    ps.plus_basis = split.plus_basis;
    ps.minus_basis = split.minus_basis;
    r.plus_dim = split.plus_basis.rows();
    r.minus_dim = split.minus_basis.rows();
    r.plus_closed = split.plus_closed;
    r.minus_closed = split.minus_closed;

    r.accepted = r.involutive && r.nontrivial && r.integrable;
    return ps;
}

inline bool is_paracomplex(const ProductStructure& ps) {
    return ps.report.plus_dim == ps.report.minus_dim;
}

/// A product-shaped algebra: two factor blocks, adjoined central elements,
/// and the cross brackets [X_i, X'_j] = Z hitting each central exactly once.
/// Derivable from a GeneratorProduct or from any algebra with that shape.
struct ProductFrame {
    LieAlgebra algebra;
    std::vector<int> factor1, factor2, centrals;
    std::vector<std::array<int, 3>> cross;   // (i, j, z) product indices
};

inline ProductFrame frame_of(const GeneratorProduct& gp) {
    return {gp.algebra, gp.embed1, gp.embed2, gp.centrals, gp.cocycle_support};
}

/// Splits the first d1 basis elements as factor 1, the next d2 as factor 2,
/// the rest as centrals, and validates the product shape.
inline ProductFrame make_frame(const LieAlgebra& g, int d1, int d2) {
    if (d1 < 1 || d2 < 1 || d1 + d2 > g.dim) throw input_error("invalid factor sizes for product frame");
    ProductFrame f;
    f.algebra = g;
    for (int i = 0; i < d1; ++i) f.factor1.push_back(i);
    for (int j = 0; j < d2; ++j) f.factor2.push_back(d1 + j);
    for (int z = d1 + d2; z < g.dim; ++z) f.centrals.push_back(z);

    const auto in_range = [](int k, int lo, int hi) { return k >= lo && k < hi; };
    std::vector<bool> hit(g.dim, false);
    for (const auto& [pair, vec] : g.constants) {
        const auto [i, j] = pair;
        if (in_range(i, 0, d1) && in_range(j, 0, d1)) {
            for (const auto& [k, c] : vec)
                if (!in_range(k, 0, d1)) throw input_error("factor 1 is not closed under the bracket");
        } else if (in_range(i, d1, d1 + d2) && in_range(j, d1, d1 + d2)) {
            for (const auto& [k, c] : vec)
                if (!in_range(k, d1, d1 + d2)) throw input_error("factor 2 is not closed under the bracket");
        } else if (in_range(i, 0, d1) && in_range(j, d1, d1 + d2)) {
            if (vec.size() != 1 || vec.begin()->second != 1 || !in_range(vec.begin()->first, d1 + d2, g.dim))
                throw input_error("cross bracket is not a single adjoined central element");
            const int z = vec.begin()->first;
            if (hit[z]) throw input_error("central element generated by two cross brackets");
            hit[z] = true;
            f.cross.push_back({i, j, z});
        } else {
            throw input_error("adjoined elements must be central");
        }
    }
    for (const int z : f.centrals)
        if (!hit[z]) throw input_error("adjoined element is not generated by any cross bracket");
    return f;
}

/// One extension of diagonal structures (E1, E2) to the product, with the
/// sign rule on each adjoined Z: equal generator signs force lambda to that
/// sign, opposite signs leave lambda free.
struct ExtensionResult {
    ProductStructure structure;
    std::vector<std::pair<int, int>> free_pairs;      // cross pairs (i, j) with free sign
    std::vector<int> lambdas;                         // chosen sign per cross pair, in cross order
};

namespace detail {

inline void require_signs(const std::vector<int>& eps, std::size_t want, const char* which) {
    if (eps.size() != want) throw input_error(std::string(which) + " sign vector has wrong length");
    for (const int e : eps)
        if (e != 1 && e != -1) throw input_error(std::string(which) + " sign vector must contain only +-1");
}

} // namespace detail

inline ExtensionResult extend_to_product(const ProductFrame& frame, const std::vector<int>& eps1,
                                         const std::vector<int>& eps2,
                                         const std::map<std::pair<int, int>, int>& choices = {}) {
    detail::require_signs(eps1, frame.factor1.size(), "factor 1");
    detail::require_signs(eps2, frame.factor2.size(), "factor 2");
    const int n = frame.algebra.dim;
    Matrix e(n, n);
    for (std::size_t t = 0; t < frame.factor1.size(); ++t) e.at(frame.factor1[t], frame.factor1[t]) = eps1[t];
    for (std::size_t t = 0; t < frame.factor2.size(); ++t) e.at(frame.factor2[t], frame.factor2[t]) = eps2[t];

    std::vector<int> pos1(n, -1), pos2(n, -1);
    for (std::size_t t = 0; t < frame.factor1.size(); ++t) pos1[frame.factor1[t]] = static_cast<int>(t);
    for (std::size_t t = 0; t < frame.factor2.size(); ++t) pos2[frame.factor2[t]] = static_cast<int>(t);

    ExtensionResult out;
    for (const auto& [i, j, z] : frame.cross) {
        const int ei = eps1[pos1[i]], ek = eps2[pos2[j]];
        int lambda;
        if (ei == ek) {
            lambda = ei;   // (1 + ei*ek) E(Z) = (ei + ek) Z forces the sign
        } else {
            const auto it = choices.find({i, j});
            if (it == choices.end())
                throw input_error("missing sign choice for free pair (" + frame.algebra.labels[i] + ", " +
                                  frame.algebra.labels[j] + ")");
            if (it->second != 1 && it->second != -1) throw input_error("sign choices must be +-1");
            lambda = it->second;
            out.free_pairs.push_back({i, j});
        }
        e.at(z, z) = lambda;
        out.lambdas.push_back(lambda);
    }
    out.structure = check_product_structure(frame.algebra, e);
    return out;
}

/// All 2^(#free pairs) extensions, in lexicographic order of the choice
/// vector (+1 before -1, first free pair most significant).
inline std::vector<ExtensionResult> enumerate_extensions(const ProductFrame& frame,
                                                         const std::vector<int>& eps1,
                                                         const std::vector<int>& eps2) {
    detail::require_signs(eps1, frame.factor1.size(), "factor 1");
    detail::require_signs(eps2, frame.factor2.size(), "factor 2");
    std::vector<int> pos1(frame.algebra.dim, -1), pos2(frame.algebra.dim, -1);
    for (std::size_t t = 0; t < frame.factor1.size(); ++t) pos1[frame.factor1[t]] = static_cast<int>(t);
    for (std::size_t t = 0; t < frame.factor2.size(); ++t) pos2[frame.factor2[t]] = static_cast<int>(t);

    std::vector<std::pair<int, int>> free_pairs;
    for (const auto& [i, j, z] : frame.cross)
        if (eps1[pos1[i]] != eps2[pos2[j]]) free_pairs.push_back({i, j});
    const int f = static_cast<int>(free_pairs.size());
    if (f > 20) throw input_error("too many free sign pairs to enumerate");

    std::vector<ExtensionResult> out;
    out.reserve(std::size_t(1) << f);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << f); ++mask) {
        std::map<std::pair<int, int>, int> choices;
        for (int t = 0; t < f; ++t)
            choices[free_pairs[t]] = (mask >> (f - 1 - t)) & 1 ? -1 : 1;
        out.push_back(extend_to_product(frame, eps1, eps2, choices));
    }
    return out;
}

/// E = +id on g_plus, -id on g_minus; all 4m^2 adjoined signs are free and
/// the lexicographically first 2m^2 take +1, so the result is paracomplex.
/// Requires b1(g_plus) = b1(g_minus) = 2m and equal factor dimensions.
inline ExtensionResult build_paracomplex_product(const LieAlgebra& g_plus, const LieAlgebra& g_minus, int m) {
    if (m < 1) throw input_error("m must be positive");
    if (betti1(g_plus) != 2 * m || betti1(g_minus) != 2 * m)
        throw input_error("both factors must have first Betti number 2m");
    if (g_plus.dim != g_minus.dim) throw input_error("factors must have equal dimension");
    const GeneratorProduct gp = generator_product(g_plus, g_minus);
    const ProductFrame frame = frame_of(gp);
    const std::vector<int> eps1(frame.factor1.size(), 1), eps2(frame.factor2.size(), -1);
    std::map<std::pair<int, int>, int> choices;
    int idx = 0;
    for (const auto& [i, j, z] : frame.cross) {
        choices[{i, j}] = idx < 2 * m * m ? 1 : -1;
        ++idx;
    }
    return extend_to_product(frame, eps1, eps2, choices);
}

} // namespace liegen
