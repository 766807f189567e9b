#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace binforms {

/// Dense matrix over an exact scalar type. Row reduction requires a field
/// (inv()); the Bareiss determinant only needs exact division (operator/),
/// so it also works over polynomial rings.
template <class R>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }

    std::vector<R> row(std::size_t i) const {
        return std::vector<R>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

    void append_row(const std::vector<R>& r) {
        if (rows_ == 0 && cols_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw std::invalid_argument("Matrix: row size mismatch");
        a_.insert(a_.end(), r.begin(), r.end());
        ++rows_;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// In-place Gauss-Jordan to reduced row echelon form. Pivot choice is the
    /// first row with a nonzero entry in the current column, so the result is
    /// canonical. Returns the pivot columns; zero rows are dropped.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && (*this)(sel, c).is_zero()) ++sel;
            if (sel == rows_) continue;
            swap_rows(r, sel);
            R piv_inv = (*this)(r, c).inv();
            for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) = (*this)(r, k) * piv_inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c).is_zero()) continue;
                R f = (*this)(i, c);
                for (std::size_t k = c; k < cols_; ++k)
                    (*this)(i, k) = (*this)(i, k) - f * (*this)(r, k);
            }
            pivots.push_back(c);
            ++r;
        }
        // drop zero rows
        a_.resize(r * cols_);
        rows_ = r;
        return pivots;
    }

    std::size_t rank() const {
        Matrix m = *this;
        return m.rref().size();
    }

    /// Basis of the right kernel {x : M x = 0}.
    std::vector<std::vector<R>> right_kernel() const {
        Matrix m = *this;
        std::vector<std::size_t> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<R>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<R> v(cols_);
            v[f] = R(1);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[pivots[i]] = -m(i, f);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Combinations of rows that vanish: kernel of the transpose.
    std::vector<std::vector<R>> left_kernel() const { return transposed().right_kernel(); }

    /// Fraction-free Bareiss determinant; divisions are exact over any
    /// integral domain with operator/.
    R det_bareiss() const {
        if (rows_ != cols_) throw std::invalid_argument("det: not square");
        std::size_t n = rows_;
        if (n == 0) return R(1);
        Matrix m = *this;
        R prev = R(1);
        bool neg = false;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            std::size_t sel = k;
            while (sel < n && m(sel, k).is_zero()) ++sel;
            if (sel == n) return R(0);
            if (sel != k) { m.swap_rows(k, sel); neg = !neg; }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j)
                    m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
                m(i, k) = R(0);
            }
            prev = m(k, k);
        }
        R det = m(n - 1, n - 1);
        return neg ? -det : det;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<R> a_;
};

/// Lexicographically next size-k column subset; false once exhausted.
inline bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
    std::size_t k = s.size();
    for (std::size_t i = k; i-- > 0;) {
        if (s[i] + (k - i) < n) {
            ++s[i];
            for (std::size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// All maximal minors of a matrix with rows() <= cols(), ordered by the
/// lexicographic order on column subsets.
template <class R>
std::vector<R> maximal_minors(const Matrix<R>& m) {
    std::size_t r = m.rows(), n = m.cols();
    if (r > n) throw std::invalid_argument("maximal_minors: more rows than columns");
    std::vector<std::size_t> cols(r);
    for (std::size_t i = 0; i < r; ++i) cols[i] = i;
    std::vector<R> out;
    do {
        Matrix<R> sub(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(i, cols[j]);
        out.push_back(sub.det_bareiss());
    } while (next_subset(cols, n));
    return out;
}

}  // namespace binforms
