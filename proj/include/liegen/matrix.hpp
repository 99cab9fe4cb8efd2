#pragma once

// Dense exact-rational linear algebra: reduced row echelon form, rank,
// kernels, inverses. Subspaces are represented as matrices in canonical
// RREF whose rows form the basis, so subspace equality is matrix equality.

#include "liegen/rational.hpp"

#include <optional>
#include <vector>

namespace liegen {

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<Rational> row(int i) const {
        std::vector<Rational> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    void append_row(const std::vector<Rational>& r) {
        if (cols_ == 0 && rows_ == 0) cols_ = static_cast<int>(r.size());
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a.at(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

inline std::vector<Rational> matvec(const Matrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
    return out;
}

/// In-place Gauss-Jordan to canonical RREF; returns the rank.
inline int rref(Matrix& m) {
    int lead = 0;
    for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
        int p = -1;
        for (int i = lead; i < m.rows(); ++i)
            if (m.at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        m.swap_rows(lead, p);
        const Rational inv = Rational(1) / m.at(lead, c);
        for (int j = c; j < m.cols(); ++j) m.at(lead, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == lead || m.at(i, c) == 0) continue;
            const Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(lead, j);
        }
        ++lead;
    }
    return lead;
}

inline int rank(Matrix m) { return rref(m); }

/// Canonical basis of the row space: RREF with zero rows dropped.
inline Matrix row_space(Matrix m) {
    const int r = rref(m);
    Matrix out(r, m.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

/// True if v lies in the row space of an RREF matrix.
inline bool contains_row(const Matrix& rr, std::vector<Rational> v) {
    for (int i = 0; i < rr.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < rr.cols(); ++j)
            if (rr.at(i, j) != 0) { p = j; break; }
        if (p < 0) continue;
        if (v[p] != 0) {
            const Rational f = v[p];
            for (int j = 0; j < rr.cols(); ++j) v[j] -= f * rr.at(i, j);
        }
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Canonical basis of { x : M x = 0 }, one solution per row.
inline Matrix kernel(Matrix m) {
    const int n = m.cols();
    const int r = rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(n, false);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) != 0) {
                pivot_col.push_back(j);
                is_pivot[j] = true;
                break;
            }
    Matrix out;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n);
        v[f] = 1;
        for (int i = 0; i < r; ++i) v[pivot_col[i]] = -m.at(i, f);
        out.append_row(v);
    }
    if (out.rows() == 0) out = Matrix(0, n);
    return row_space(out);
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    rref(aug);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (aug.at(i, j) != (i == j ? 1 : 0)) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

inline Matrix stack(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

/// dim(U ∩ V) for subspaces given as row-basis matrices.
inline int intersection_dim(const Matrix& u, const Matrix& v) {
    if (u.rows() == 0 || v.rows() == 0) return 0;
    return u.rows() + v.rows() - rank(stack(u, v));
}

} // namespace liegen
