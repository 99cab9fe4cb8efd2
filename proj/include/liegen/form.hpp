#pragma once

// Exterior forms on the dual of a Lie algebra, with Polynomial coefficients
// (constants are degree-0 polynomials, so concrete and generic forms share
// one code path). Includes the Maurer-Cartan forms of an algebra and the
// bracket <-> Maurer-Cartan conversions under the fixed sign convention
//
//     dw_k = - sum_{i<j} C_ij^k  w_i ^ w_j,   i.e.  dw(X, Y) = -w([X, Y]).

#include "liegen/lie_algebra.hpp"
#include "liegen/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace liegen {

struct Form {
    int ambient = 0;
    int degree = 0;
    VarList vars;
    std::map<std::vector<int>, Polynomial> coeffs;   // strictly increasing 0-based tuples

    Form() : vars(no_vars()) {}
    Form(int ambient_dim, int deg, VarList v) : ambient(ambient_dim), degree(deg), vars(std::move(v)) {}

    bool is_zero() const { return coeffs.empty(); }

    void add_term(const std::vector<int>& idx, const Polynomial& p) {
        if (p.is_zero()) return;
        auto it = coeffs.find(idx);
        if (it == coeffs.end()) {
            coeffs[idx] = p;
            return;
        }
        it->second = it->second + p;
        if (it->second.is_zero()) coeffs.erase(it);
    }

    friend bool operator==(const Form& a, const Form& b) {
        return a.ambient == b.ambient && a.degree == b.degree && a.coeffs == b.coeffs;
    }
};

/// w_{i1} ^ ... ^ w_ik for a strictly increasing tuple.
inline Form basis_form(int ambient, const std::vector<int>& idx, VarList vars) {
    Form f(ambient, static_cast<int>(idx.size()), vars);
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (idx[t] < 0 || idx[t] >= ambient) throw input_error("form index out of range");
        if (t + 1 < idx.size() && idx[t] >= idx[t + 1]) throw input_error("form indices must increase");
    }
    f.coeffs[idx] = Polynomial::constant(vars, 1);
    return f;
}

inline Form operator+(const Form& a, const Form& b) {
    if (a.ambient != b.ambient || a.degree != b.degree) throw input_error("form shape mismatch");
    Form out = a;
    for (const auto& [idx, p] : b.coeffs) out.add_term(idx, p);
    return out;
}

inline Form operator*(const Polynomial& p, const Form& a) {
    Form out(a.ambient, a.degree, a.vars);
    for (const auto& [idx, q] : a.coeffs) out.add_term(idx, p * q);
    return out;
}

inline Form operator*(const Rational& c, const Form& a) {
    Form out(a.ambient, a.degree, a.vars);
    if (c == 0) return out;
    for (const auto& [idx, q] : a.coeffs) out.coeffs[idx] = q * c;
    return out;
}

namespace detail {

/// Merges two strictly increasing tuples; returns false on a repeated index,
/// otherwise fills `out` and the sign of the sorting permutation.
inline bool merge_indices(const std::vector<int>& a, const std::vector<int>& b,
                          std::vector<int>& out, int& sign) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            inversions += static_cast<long long>(a.size() - i);
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    sign = (inversions % 2 == 0) ? 1 : -1;
    return true;
}

} // namespace detail

inline Form wedge(const Form& a, const Form& b) {
    if (a.ambient != b.ambient) throw input_error("wedge of forms on different spaces");
    if (!same_universe(a.vars, b.vars)) throw input_error("wedge of forms over different variables");
    Form out(a.ambient, a.degree + b.degree, a.vars);
    if (out.degree > a.ambient) return out;
    std::vector<int> merged;
    for (const auto& [ia, pa] : a.coeffs)
        for (const auto& [ib, pb] : b.coeffs) {
            int sign = 1;
            if (!detail::merge_indices(ia, ib, merged, sign)) continue;
            Polynomial term = pa * pb;
            if (sign < 0) term = -term;
            out.add_term(merged, term);
        }
    return out;
}

/// a ^ a ^ ... ^ a, j factors; a must have degree 2.
inline Form wedge_power(const Form& a, int j) {
    if (a.degree != 2) throw input_error("wedge_power expects a 2-form");
    if (j < 1) throw input_error("wedge_power exponent must be positive");
    Form out = a;
    for (int t = 1; t < j; ++t) {
        out = wedge(out, a);
        if (out.is_zero()) break;
    }
    return out;
}

/// Interior product (contraction in the first slot): X_i -| w_j = delta_ij.
inline Form interior_product(const std::vector<Rational>& v, const Form& a) {
    if (static_cast<int>(v.size()) != a.ambient) throw input_error("interior product vector has wrong dimension");
    if (a.degree == 0) throw input_error("interior product of a degree-0 form");
    Form out(a.ambient, a.degree - 1, a.vars);
    for (const auto& [idx, p] : a.coeffs)
        for (std::size_t t = 0; t < idx.size(); ++t) {
            const Rational c = v[idx[t]];
            if (c == 0) continue;
            std::vector<int> rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t s = 0; s < idx.size(); ++s)
                if (s != t) rest.push_back(idx[s]);
            const Rational signed_c = (t % 2 == 0) ? c : Rational(-c);
            out.add_term(rest, p * signed_c);
        }
    return out;
}

/// The 2-forms dw_1 .. dw_n of the algebra, over the given variable universe.
inline std::vector<Form> maurer_cartan(const LieAlgebra& g, VarList vars = no_vars()) {
    std::vector<Form> out(g.dim, Form(g.dim, 2, vars));
    for (const auto& [pair, vec] : g.constants)
        for (const auto& [k, c] : vec)
            out[k].add_term({pair.first, pair.second}, Polynomial::constant(vars, -c));
    return out;
}

/// Reconstructs the bracket table from constant-coefficient 2-forms. Inverse
/// of maurer_cartan under the library's sign convention.
inline LieAlgebra mc_to_brackets(const std::vector<Form>& forms, std::vector<std::string> labels = {}) {
    const int n = static_cast<int>(forms.size());
    if (n == 0) throw input_error("empty Maurer-Cartan system");
    LieAlgebra g = make_lie_algebra(n, std::move(labels));
    std::map<std::pair<int, int>, SparseVec> table;
    for (int k = 0; k < n; ++k) {
        const Form& f = forms[k];
        if (f.ambient != n || (f.degree != 2 && !f.is_zero()))
            throw input_error("Maurer-Cartan form has wrong shape");
        for (const auto& [idx, p] : f.coeffs) {
            if (!p.is_constant()) throw input_error("Maurer-Cartan coefficients must be constant");
            table[{idx[0], idx[1]}][k] = -p.constant_value();
        }
    }
    for (auto& [pair, vec] : table) set_bracket(g, pair.first, pair.second, vec);
    return g;
}

inline std::vector<Form> brackets_to_mc(const LieAlgebra& g) { return maurer_cartan(g); }

/// Name of the dual 1-form of a basis element: X5 -> w5, X5' -> w5', Z3 -> eta3.
inline std::string dual_label(const std::string& label) {
    if (!label.empty() && (label[0] == 'X' || label[0] == 'x' || label[0] == 'e'))
        return "w" + label.substr(1);
    if (!label.empty() && label[0] == 'Z') return "eta" + label.substr(1);
    return "w_" + label;
}

inline std::vector<std::string> dual_labels(const LieAlgebra& g) {
    std::vector<std::string> out;
    out.reserve(g.labels.size());
    for (const auto& l : g.labels) out.push_back(dual_label(l));
    return out;
}

namespace detail {

inline std::string wedge_monomial_str(const std::vector<int>& idx, const std::vector<std::string>& names) {
    std::ostringstream os;
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t) os << "^";
        os << names[idx[t]];
    }
    return os.str();
}

} // namespace detail

/// Renders a form as "c*wi^wj + ...". Degree-2 terms are listed in
/// colexicographic order, which matches the usual hand-written layout of
/// Maurer-Cartan systems; other degrees list terms lexicographically.
inline std::string form_to_string(const Form& f, const std::vector<std::string>& names) {
    if (f.is_zero()) return "0";
    if (f.degree == 0) return f.coeffs.begin()->second.str();
    std::vector<const std::pair<const std::vector<int>, Polynomial>*> terms;
    terms.reserve(f.coeffs.size());
    for (const auto& entry : f.coeffs) terms.push_back(&entry);
    if (f.degree == 2)
        std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
            return std::pair(a->first[1], a->first[0]) < std::pair(b->first[1], b->first[0]);
        });
    std::ostringstream os;
    bool first = true;
    for (const auto* entry : terms) {
        const auto& [idx, p] = *entry;
        std::string coeff;
        bool neg = false;
        if (p.is_constant()) {
            Rational c = p.constant_value();
            neg = c < 0;
            if (neg) c = -c;
            if (c != 1) coeff = to_string(c) + "*";
        } else {
            coeff = "(" + p.str() + ")*";
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        os << coeff << detail::wedge_monomial_str(idx, names);
    }
    return os.str();
}

/// One Maurer-Cartan equation, e.g. "dw1 = w2^w3 + w1^w4".
inline std::string mc_equation_string(const LieAlgebra& g, int k, const std::vector<Form>& forms) {
    const auto names = dual_labels(g);
    return "d" + names[k] + " = " + form_to_string(forms[k], names);
}

inline std::vector<std::string> mc_system_strings(const LieAlgebra& g) {
    const auto forms = maurer_cartan(g);
    std::vector<std::string> out;
    out.reserve(g.dim);
    for (int k = 0; k < g.dim; ++k) out.push_back(mc_equation_string(g, k, forms));
    return out;
}

/// Matrix of a constant-coefficient 2-form: M[i][j] = w(X_i, X_j).
inline Matrix constant_form_matrix(const Form& f) {
    if (f.degree != 2) throw input_error("expected a 2-form");
    Matrix m(f.ambient, f.ambient);
    for (const auto& [idx, p] : f.coeffs) {
        if (!p.is_constant()) throw input_error("expected constant coefficients");
        const Rational c = p.constant_value();
        m.at(idx[0], idx[1]) = c;
        m.at(idx[1], idx[0]) = -c;
    }
    return m;
}

/// Largest j with the j-th wedge power nonzero (0 for the zero form),
/// computed from the rank of the form's matrix.
inline int constant_form_j0(const Form& f) { return rank(constant_form_matrix(f)) / 2; }

} // namespace liegen
