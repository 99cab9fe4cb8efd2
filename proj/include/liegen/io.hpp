#pragma once

// The algebra file format and its parser/emitter.
//
//   # comment
//   dim 5
//   labels X1 X2 X3 X4 X5        (optional; defaults to X1..Xn)
//   brackets                     (or: mc)
//   [X2,X3] = -X1
//   [X1,X4] = -X1
//
// An `mc` block instead gives Maurer-Cartan equations "d w1 = w2^w3 + ...".
// Statements are separated by newlines or semicolons; rationals are "p" or
// "p/q"; unicode omega/eta/wedge/minus/prime are accepted on input and
// ASCII is emitted. Indices in files are 1-based via the label names.

#include "liegen/form.hpp"
#include "liegen/lie_algebra.hpp"
#include "liegen/matrix.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace liegen {
namespace detail {

inline void replace_all(std::string& s, const std::string& from, const std::string& to) {
    std::size_t pos = 0;
    while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
    }
}

inline std::string normalize_unicode(std::string s) {
    replace_all(s, "\xCF\x89", "w");            // omega
    replace_all(s, "\xCE\xB7", "eta");          // eta
    replace_all(s, "\xE2\x88\xA7", "^");        // wedge
    replace_all(s, "\xE2\x88\x92", "-");        // minus sign
    replace_all(s, "\xE2\x80\xB2", "'");        // prime
    return s;
}

struct Statement {
    std::string text;   // whitespace-stripped
    int line;
    int col;
};

inline std::vector<Statement> split_statements(const std::string& input) {
    std::vector<Statement> out;
    int line = 1;
    std::size_t i = 0;
    while (i <= input.size()) {
        std::size_t j = i;
        while (j < input.size() && input[j] != '\n' && input[j] != ';') ++j;
        std::string stmt = input.substr(i, j - i);
        const std::size_t hash = stmt.find('#');
        if (hash != std::string::npos) stmt = stmt.substr(0, hash);
        std::size_t line_start = input.rfind('\n', i == 0 ? 0 : i - 1);
        line_start = (line_start == std::string::npos || i == 0) ? 0 : line_start + 1;
        const int col = static_cast<int>(i - line_start) + 1;
        std::size_t first = stmt.find_first_not_of(" \t\r");
        if (first != std::string::npos) {
            const std::size_t last = stmt.find_last_not_of(" \t\r");
            out.push_back({stmt.substr(first, last - first + 1), line, col + static_cast<int>(first)});
        }
        if (j < input.size() && input[j] == '\n') ++line;
        i = j + 1;
        if (j == input.size()) break;
    }
    return out;
}

[[noreturn]] inline void parse_fail(const Statement& st, const std::string& msg) {
    throw input_error("line " + std::to_string(st.line) + ", col " + std::to_string(st.col) + ": " + msg);
}

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s)
        if (c != ' ' && c != '\t' && c != '\r') out.push_back(c);
    return out;
}

/// Splits "c1*A + c2*B - C" into (coefficient, atom) pairs; atoms resolved later.
inline std::vector<std::pair<Rational, std::string>> parse_linear_combination(const Statement& st,
                                                                              const std::string& rhs) {
    std::vector<std::pair<Rational, std::string>> terms;
    const std::string s = strip_spaces(rhs);
    if (s.empty()) parse_fail(st, "empty right-hand side");
    if (s == "0") return terms;
    std::size_t i = 0;
    while (i < s.size()) {
        Rational sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) parse_fail(st, "dangling sign");
        Rational coeff = sign;
        const std::size_t star = term.find('*');
        if (star != std::string::npos) {
            coeff = sign * parse_rational(term.substr(0, star));
            term = term.substr(star + 1);
        } else if (!term.empty() && (std::isdigit(static_cast<unsigned char>(term[0])))) {
            parse_fail(st, "numeric coefficient must be followed by '*'");
        }
        if (term.empty()) parse_fail(st, "missing basis name in term");
        terms.push_back({coeff, term});
        i = j;
    }
    return terms;
}

} // namespace detail

/// Exact parse of the algebra file format. Duplicate bracket declarations
/// (including antisymmetric restatements) are errors; the parsed algebra
/// must satisfy the Jacobi identity or the violating triples are reported.
inline LieAlgebra parse_algebra(const std::string& raw_text) {
    using detail::parse_fail;
    const std::string text = detail::normalize_unicode(raw_text);
    const auto statements = detail::split_statements(text);

    int dim = -1;
    std::vector<std::string> labels;
    enum class Mode { unset, brackets, mc } mode = Mode::unset;
    std::map<std::string, int> label_index, mc_index;
    LieAlgebra g;
    std::vector<Form> mc_forms;
    std::map<std::pair<int, int>, detail::Statement> declared;

    const auto require_dim = [&](const detail::Statement& st) {
        if (dim < 0) parse_fail(st, "dim must be declared first");
    };
    const auto init_algebra = [&]() {
        if (labels.empty()) labels = default_labels(dim);
        g = make_lie_algebra(dim, labels);
        label_index.clear();
        mc_index.clear();
        for (int i = 0; i < dim; ++i) {
            label_index[g.labels[i]] = i;
            mc_index[dual_label(g.labels[i])] = i;
        }
        mc_forms.assign(dim, Form(dim, 2, no_vars()));
    };

    for (const auto& st : statements) {
        const std::string& s = st.text;
        if (s.rfind("dim", 0) == 0 && (s.size() == 3 || s[3] == ' ' || s[3] == '\t')) {
            if (dim >= 0) parse_fail(st, "dim declared twice");
            std::istringstream is(s.substr(3));
            if (!(is >> dim) || dim < 1) parse_fail(st, "bad dimension");
            std::string extra;
            if (is >> extra) parse_fail(st, "trailing tokens after dim");
            init_algebra();
        } else if (s.rfind("labels", 0) == 0) {
            require_dim(st);
            if (!g.constants.empty() || !declared.empty()) parse_fail(st, "labels must precede brackets");
            std::istringstream is(s.substr(6));
            labels.clear();
            std::string tok;
            while (is >> tok) labels.push_back(tok);
            if (static_cast<int>(labels.size()) != dim) parse_fail(st, "label count does not match dim");
            init_algebra();
        } else if (s == "brackets") {
            if (mode == Mode::mc) parse_fail(st, "cannot mix brackets and mc blocks");
            mode = Mode::brackets;
        } else if (s == "mc") {
            if (mode == Mode::brackets) parse_fail(st, "cannot mix brackets and mc blocks");
            mode = Mode::mc;
        } else if (!s.empty() && s[0] == '[') {
            require_dim(st);
            if (mode == Mode::mc) parse_fail(st, "bracket line inside an mc block");
            mode = Mode::brackets;
            const std::string line = detail::strip_spaces(s);
            const std::size_t close = line.find(']');
            const std::size_t comma = line.find(',');
            const std::size_t eq = line.find('=');
            if (close == std::string::npos || comma == std::string::npos || comma > close ||
                eq == std::string::npos || eq < close)
                parse_fail(st, "malformed bracket line, expected [A,B] = ...");
            const std::string a = line.substr(1, comma - 1);
            const std::string b = line.substr(comma + 1, close - comma - 1);
            const auto ia = label_index.find(a), ib = label_index.find(b);
            if (ia == label_index.end()) parse_fail(st, "unknown basis name '" + a + "'");
            if (ib == label_index.end()) parse_fail(st, "unknown basis name '" + b + "'");
            int i = ia->second, j = ib->second;
            if (i == j) parse_fail(st, "self-bracket [" + a + "," + a + "] is identically zero");
            Rational sign = 1;
            if (i > j) {
                std::swap(i, j);
                sign = -1;
            }
            if (declared.count({i, j})) {
                const auto& prev = declared.at({i, j});
                parse_fail(st, "duplicate bracket declaration for (" + g.labels[i] + "," + g.labels[j] +
                                   "), first declared at line " + std::to_string(prev.line) +
                                   " (antisymmetry makes the pair order immaterial)");
            }
            declared.insert({{i, j}, st});
            SparseVec v;
            for (const auto& [c, name] : detail::parse_linear_combination(st, line.substr(eq + 1))) {
                const auto ik = label_index.find(name);
                if (ik == label_index.end()) parse_fail(st, "unknown basis name '" + name + "'");
                v[ik->second] += sign * c;
                if (v[ik->second] == 0) v.erase(ik->second);
            }
            set_bracket(g, i, j, v);
        } else if (!s.empty() && s[0] == 'd') {
            require_dim(st);
            if (mode == Mode::brackets) parse_fail(st, "mc line inside a brackets block");
            mode = Mode::mc;
            const std::string line = detail::strip_spaces(s);
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos) parse_fail(st, "malformed mc line, expected d wk = ...");
            const std::string lhs = line.substr(1, eq - 1);
            const auto ik = mc_index.find(lhs);
            if (ik == mc_index.end()) parse_fail(st, "unknown form name '" + lhs + "'");
            const int k = ik->second;
            if (!mc_forms[k].is_zero()) parse_fail(st, "duplicate mc declaration for d" + lhs);
            for (const auto& [c, atom] : detail::parse_linear_combination(st, line.substr(eq + 1))) {
                const std::size_t caret = atom.find('^');
                if (caret == std::string::npos) parse_fail(st, "mc term '" + atom + "' is not a wedge of two forms");
                const std::string na = atom.substr(0, caret), nb = atom.substr(caret + 1);
                const auto iaf = mc_index.find(na), ibf = mc_index.find(nb);
                if (iaf == mc_index.end()) parse_fail(st, "unknown form name '" + na + "'");
                if (ibf == mc_index.end()) parse_fail(st, "unknown form name '" + nb + "'");
                int i = iaf->second, j = ibf->second;
                Rational coeff = c;
                if (i == j) parse_fail(st, "repeated factor in wedge term '" + atom + "'");
                if (i > j) {
                    std::swap(i, j);
                    coeff = -coeff;
                }
                mc_forms[k].add_term({i, j}, Polynomial::constant(no_vars(), coeff));
            }
        } else {
            parse_fail(st, "unrecognized statement '" + s + "'");
        }
    }

    if (dim < 0) throw input_error("missing dim declaration");
    if (mode == Mode::mc) g = mc_to_brackets(mc_forms, g.labels);

    const auto jac = check_jacobi(g);
    if (!jac.ok) {
        std::ostringstream os;
        os << "Jacobi identity fails for " << jac.violations.size() << " triple(s):";
        for (const auto& v : jac.violations) {
            os << " (" << g.labels[v.i] << "," << g.labels[v.j] << "," << g.labels[v.k] << ") residual";
            for (int k = 0; k < g.dim; ++k)
                if (v.residual[k] != 0) os << " " << to_string(v.residual[k]) << "*" << g.labels[k];
            os << ";";
        }
        throw input_error(os.str());
    }
    return g;
}

inline std::string format_coefficient_term(const Rational& c, const std::string& name, bool first) {
    std::string out;
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first)
        out += neg ? "-" : "";
    else
        out += neg ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += name;
    return out;
}

/// Canonical emission; parse(emit(g)) == g exactly.
inline std::string emit_algebra(const LieAlgebra& g) {
    std::ostringstream os;
    os << "dim " << g.dim << "\n";
    os << "labels";
    for (const auto& l : g.labels) os << " " << l;
    os << "\n";
    os << "brackets\n";
    for (const auto& [pair, vec] : g.constants) {
        os << "[" << g.labels[pair.first] << "," << g.labels[pair.second] << "] =";
        bool first = true;
        for (const auto& [k, c] : vec) {
            os << (first ? " " : "") << format_coefficient_term(c, g.labels[k], first);
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

/// Emits the Maurer-Cartan presentation of an algebra.
inline std::string emit_mc(const LieAlgebra& g) {
    std::ostringstream os;
    os << "dim " << g.dim << "\n";
    os << "labels";
    for (const auto& l : g.labels) os << " " << l;
    os << "\n";
    os << "mc\n";
    for (const auto& eq : mc_system_strings(g)) os << eq << "\n";
    return os.str();
}

/// Matrix file: either "diag: 1 1 -1 -1" or n rows of n rationals.
inline Matrix parse_matrix(const std::string& raw_text, int n) {
    std::string text = detail::normalize_unicode(raw_text);
    std::ostringstream cleaned;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        cleaned << line << "\n";
    }
    text = cleaned.str();
    for (char& c : text)
        if (c == ',') c = ' ';

    std::istringstream is(text);
    std::string tok;
    std::vector<std::string> tokens;
    while (is >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw input_error("empty matrix");

    std::size_t start = 0;
    bool diagonal = false;
    if (tokens[0] == "diag:") {
        diagonal = true;
        start = 1;
    } else if (tokens[0].rfind("diag:", 0) == 0) {
        diagonal = true;
        tokens[0] = tokens[0].substr(5);
    }

    std::vector<Rational> values;
    for (std::size_t i = start; i < tokens.size(); ++i) values.push_back(parse_rational(tokens[i]));
    Matrix m(n, n);
    if (diagonal) {
        if (static_cast<int>(values.size()) != n)
            throw input_error("diagonal matrix needs exactly " + std::to_string(n) + " entries");
        for (int i = 0; i < n; ++i) m.at(i, i) = values[i];
    } else {
        if (static_cast<int>(values.size()) != n * n)
            throw input_error("matrix needs exactly " + std::to_string(n * n) + " entries");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = values[static_cast<std::size_t>(i) * n + j];
    }
    return m;
}

} // namespace liegen
