#pragma once

// Sparse multivariate polynomials with exact rational coefficients over a
// shared, ordered variable universe. Monomials are ordered graded-lex so
// leading terms (and hence pivots downstream) are deterministic.

#include "liegen/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace liegen {

using VarNames = std::vector<std::string>;
using VarList  = std::shared_ptr<const VarNames>;

inline VarList make_vars(VarNames names) { return std::make_shared<const VarNames>(std::move(names)); }

inline VarList make_indexed_vars(const std::string& prefix, int n) {
    VarNames names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
    return make_vars(std::move(names));
}

inline VarList no_vars() {
    static const VarList empty = make_vars({});
    return empty;
}

inline bool same_universe(const VarList& a, const VarList& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

struct Monomial {
    std::vector<std::uint32_t> exp;

    int degree() const {
        int d = 0;
        for (const auto e : exp) d += static_cast<int>(e);
        return d;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic "less", first variable most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exp < b.exp;
    }
};

class Polynomial {
public:
    Polynomial() : vars_(no_vars()) {}
    explicit Polynomial(VarList vars) : vars_(std::move(vars)) {}

    static Polynomial constant(VarList vars, const Rational& c) {
        Polynomial p(std::move(vars));
        if (c != 0) p.terms_[Monomial{std::vector<std::uint32_t>(p.nvars(), 0)}] = c;
        return p;
    }

    static Polynomial variable(VarList vars, int index) {
        Polynomial p(vars);
        if (index < 0 || index >= p.nvars()) throw input_error("variable index out of range");
        Monomial m{std::vector<std::uint32_t>(p.nvars(), 0)};
        m.exp[index] = 1;
        p.terms_[m] = 1;
        return p;
    }

    const VarList& vars() const { return vars_; }
    int nvars() const { return vars_ ? static_cast<int>(vars_->size()) : 0; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first.degree() == 0;
    }

    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw input_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    int degree() const {
        if (terms_.empty()) return -1;
        return terms_.rbegin()->first.degree();
    }

    const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }

    std::pair<Monomial, Rational> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    Polynomial operator-() const {
        Polynomial out(vars_);
        for (const auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_universe(a, b);
        Polynomial out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same_universe(a, b);
        Polynomial out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_universe(a, b);
        Polynomial out(a.vars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += mb.exp[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& c) {
        Polynomial out(a.vars_);
        if (c == 0) return out;
        for (const auto& [m, coeff] : a.terms_) out.terms_[m] = coeff * c;
        return out;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_universe(a.vars_, b.vars_) && a.terms_ == b.terms_;
    }

    /// Substitutes a rational for every variable.
    Rational eval(const std::vector<Rational>& point) const {
        if (static_cast<int>(point.size()) != nvars()) throw input_error("evaluation point has wrong arity");
        Rational out = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.exp.size(); ++i)
                for (std::uint32_t e = 0; e < m.exp[i]; ++e) t *= point[i];
            out += t;
        }
        return out;
    }

    /// Exponent of variable `index` in the single term of a monomial polynomial.
    std::uint32_t single_term_exponent(int index) const {
        if (terms_.size() != 1) throw std::logic_error("not a single-term polynomial");
        return terms_.begin()->first.exp[index];
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // Highest term first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (first) {
                if (neg) os << "-";
                first = false;
            } else {
                os << (neg ? " - " : " + ");
            }
            std::string mono = monomial_str(m);
            if (mono.empty())
                os << to_string(mag);
            else if (mag == 1)
                os << mono;
            else
                os << to_string(mag) << "*" << mono;
        }
        return os.str();
    }

private:
    static void require_same_universe(const Polynomial& a, const Polynomial& b) {
        if (!same_universe(a.vars_, b.vars_)) throw input_error("polynomial variable universes differ");
    }

    std::string monomial_str(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << (*vars_)[i];
            if (m.exp[i] > 1) os << "^" << m.exp[i];
        }
        return os.str();
    }

    VarList vars_;
    std::map<Monomial, Rational, GrlexLess> terms_;
};

/// Exact division: returns q with a = q*b. Throws std::logic_error if the
/// division is not exact (used to certify Bareiss steps).
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::logic_error("exact division by zero polynomial");
    if (!same_universe(a.vars(), b.vars())) throw input_error("polynomial variable universes differ");
    Polynomial q(a.vars());
    Polynomial r = a;
    const auto [mb, cb] = b.leading_term();
    while (!r.is_zero()) {
        const auto [mr, cr] = r.leading_term();
        Monomial mq = mr;
        for (std::size_t i = 0; i < mq.exp.size(); ++i) {
            if (mq.exp[i] < mb.exp[i]) throw std::logic_error("inexact polynomial division");
            mq.exp[i] -= mb.exp[i];
        }
        Polynomial t(a.vars());
        t.add_term(mq, cr / cb);
        q = q + t;
        r = r - t * b;
        if (!r.is_zero() && !GrlexLess{}(r.leading_term().first, mr))
            throw std::logic_error("inexact polynomial division");
    }
    return q;
}

} // namespace liegen
