#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstddef>
#include <vector>

namespace lkd {

using Rat = boost::multiprecision::cpp_rational;

/// Dense rational matrix. Dimensions stay small (a few hundred at most),
/// so exact Gaussian elimination is fine.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend Mat operator*(const Rat& c, const Mat& a) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = c * a.data_[i];
        return r;
    }
    /// Matrix product; (a*b) applied to a column vector is a(b(x)).
    friend Mat operator*(const Mat& a, const Mat& b) {
        assert(a.cols_ == b.rows_);
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rat& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::size_t rank() const {
        Mat m = *this;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && m(piv, col) == 0) ++piv;
            if (piv == rows_) continue;
            m.swap_rows(piv, r);
            const Rat p = m(r, col);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (m(i, col) == 0) continue;
                const Rat f = m(i, col) / p;
                for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(r, j);
            }
            ++r;
        }
        return r;
    }

    /// Basis of the null space (columns x with Ax = 0), as column vectors.
    std::vector<std::vector<Rat>> kernel_basis() const {
        Mat m = *this;
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && m(piv, col) == 0) ++piv;
            if (piv == rows_) continue;
            m.swap_rows(piv, r);
            const Rat p = m(r, col);
            for (std::size_t j = col; j < cols_; ++j) m(r, j) /= p;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m(i, col) == 0) continue;
                const Rat f = m(i, col);
                for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(r, j);
            }
            pivot_col.push_back(col);
            ++r;
        }
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<Rat>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<Rat> x(cols_);
            x[free] = 1;
            for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = -m(k, free);
            basis.push_back(std::move(x));
        }
        return basis;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

inline std::vector<Rat> apply(const Mat& a, const std::vector<Rat>& x) {
    assert(a.cols() == x.size());
    std::vector<Rat> y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
    return y;
}

/// Matrix with the given vectors as columns.
inline Mat from_columns(const std::vector<std::vector<Rat>>& cols, std::size_t dim) {
    Mat m(dim, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        assert(cols[j].size() == dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

/// Solve A x = b; requires a solution to exist (columns of A span b).
/// Returns one solution (used for change-of-basis between spanning sets).
inline std::vector<Rat> solve(const Mat& a, const std::vector<Rat>& b) {
    const std::size_t n = a.rows(), m = a.cols();
    assert(b.size() == n);
    Mat aug(n, m + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) aug(i, j) = a(i, j);
        aug(i, m) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m && r < n; ++col) {
        std::size_t piv = r;
        while (piv < n && aug(piv, col) == 0) ++piv;
        if (piv == n) continue;
        aug.swap_rows(piv, r);
        const Rat p = aug(r, col);
        for (std::size_t j = col; j <= m; ++j) aug(r, j) /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || aug(i, col) == 0) continue;
            const Rat f = aug(i, col);
            for (std::size_t j = col; j <= m; ++j) aug(i, j) -= f * aug(r, j);
        }
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<Rat> x(m);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = aug(k, m);
    // consistency: rows below r must have zero rhs
    for (std::size_t i = r; i < n; ++i) assert(aug(i, m) == 0);
    return x;
}

}  // namespace lkd
