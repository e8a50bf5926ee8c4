#pragma once

/**
 * @file matrix.hpp
 * @brief Dense matrices over an exact field, plus the few linear algebra
 * routines the rest of the library needs (inverse, kernel, minimal polynomial).
 */

#include "skewrep/exactmath/polynomial.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewrep {

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }
    static Matrix diagonal(const std::vector<F>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    static Matrix scalar(std::size_t n, const F& s) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    bool zero() const {
        for (const auto& x : a_)
            if (!is_zero(x)) return false;
        return true;
    }
    bool is_diagonal() const {
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                if (i != j && !is_zero((*this)(i, j))) return false;
        return true;
    }
    bool is_scalar() const {
        if (!square() || !is_diagonal()) return false;
        for (std::size_t i = 1; i < r_; ++i)
            if (!((*this)(i, i) == (*this)(0, 0))) return false;
        return true;
    }

    template <class G>
    Matrix<G> map(const std::function<G(const F&)>& fn) const {
        Matrix<G> out(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out(i, j) = is_zero((*this)(i, j)) ? G(0) : fn((*this)(i, j));
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!is_zero(o.a_[i])) a_[i] = a_[i] + o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!is_zero(o.a_[i])) a_[i] = a_[i] - o.a_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.a_)
            if (!is_zero(x)) x = -x;
        return a;
    }
    friend Matrix operator*(const F& s, Matrix a) {
        for (auto& x : a.a_)
            if (!is_zero(x)) x = s * x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product dimension mismatch");
        Matrix out(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const F& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) {
                    const F& y = b(k, j);
                    if (is_zero(y)) continue;
                    out(i, j) = out(i, j) + x * y;
                }
            }
        return out;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    F trace() const {
        F t = F(0);
        for (std::size_t i = 0; i < std::min(r_, c_); ++i) t = t + (*this)(i, i);
        return t;
    }

    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    Matrix inverse() const {
        if (!square()) throw std::invalid_argument("inverse of a non-square matrix");
        const std::size_t n = r_;
        Matrix a = *this, inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && is_zero(a(piv, col))) ++piv;
            if (piv == n) throw std::domain_error("matrix is singular");
            if (piv != col) {
                a.swap_rows(piv, col);
                inv.swap_rows(piv, col);
            }
            const F p = a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                if (!is_zero(a(col, j))) a(col, j) = a(col, j) / p;
                if (!is_zero(inv(col, j))) inv(col, j) = inv(col, j) / p;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || is_zero(a(i, col))) continue;
                const F f = a(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    if (!is_zero(a(col, j))) a(i, j) = a(i, j) - f * a(col, j);
                    if (!is_zero(inv(col, j))) inv(i, j) = inv(i, j) - f * inv(col, j);
                }
            }
        }
        return inv;
    }

    /// Reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> row_reduce() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < c_ && row < r_; ++col) {
            std::size_t piv = row;
            while (piv < r_ && is_zero((*this)(piv, col))) ++piv;
            if (piv == r_) continue;
            swap_rows(piv, row);
            const F p = (*this)(row, col);
            for (std::size_t j = col; j < c_; ++j)
                if (!is_zero((*this)(row, j))) (*this)(row, j) = (*this)(row, j) / p;
            for (std::size_t i = 0; i < r_; ++i) {
                if (i == row || is_zero((*this)(i, col))) continue;
                const F f = (*this)(i, col);
                for (std::size_t j = col; j < c_; ++j)
                    if (!is_zero((*this)(row, j))) (*this)(i, j) = (*this)(i, j) - f * (*this)(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        Matrix t = *this;
        return t.row_reduce().size();
    }

    /// Basis of the right kernel, one vector per free column.
    std::vector<std::vector<F>> kernel() const {
        Matrix t = *this;
        auto piv = t.row_reduce();
        std::vector<bool> is_piv(c_, false);
        for (auto p : piv) is_piv[p] = true;
        std::vector<std::vector<F>> basis;
        for (std::size_t free = 0; free < c_; ++free) {
            if (is_piv[free]) continue;
            std::vector<F> v(c_, F(0));
            v[free] = F(1);
            for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -t(r, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Restrict to a subset of rows and columns.
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        Matrix s(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
        return s;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < c_; ++k) std::swap(a_[i * c_ + k], a_[j * c_ + k]);
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<F> a_;

    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix dimension mismatch");
    }
};

/// Graded commutator ab - (-1)^{pa*pb} ba.
template <class F>
Matrix<F> supercommutator(const Matrix<F>& a, const Matrix<F>& b, int parity_a, int parity_b) {
    Matrix<F> ba = b * a;
    if ((parity_a & parity_b & 1) != 0) return a * b + ba;
    return a * b - ba;
}

/// Minimal polynomial (monic) via the first linear dependence among I, A, A^2, ...
template <class F>
Polynomial<F> minimal_polynomial(const Matrix<F>& a) {
    if (!a.square()) throw std::invalid_argument("minimal polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    const std::size_t nn = n * n;
    std::vector<Matrix<F>> powers{Matrix<F>::identity(n)};
    for (std::size_t k = 1; k <= n; ++k) {
        powers.push_back(powers.back() * a);
        // columns vec(A^0) .. vec(A^k)
        Matrix<F> sys(nn, k + 1);
        for (std::size_t c = 0; c <= k; ++c)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) sys(i * n + j, c) = powers[c](i, j);
        auto ker = sys.kernel();
        if (ker.empty()) continue;
        // the lowest degree relation has nonzero top coefficient
        const auto& v = ker.front();
        return Polynomial<F>(v).monic();
    }
    throw std::logic_error("minimal polynomial search exceeded the matrix dimension");
}

/// Characteristic polynomial det(x I - A) by Faddeev-LeVerrier.
template <class F>
Polynomial<F> characteristic_polynomial(const Matrix<F>& a) {
    if (!a.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<F> c(n + 1, F(0));
    c[n] = F(1);
    Matrix<F> m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + Matrix<F>::scalar(n, c[n - k + 1]);
        c[n - k] = -(a * m).trace() / F(static_cast<int>(k));
    }
    return Polynomial<F>(std::move(c));
}

} // namespace skewrep
