#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace traceforge {

// Dense square-ish matrix over an exact field type T. T needs +, -, *, /,
// unary -, equality and is_zero(). Sizes here are tiny (<= ~12).
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    explicit Matrix(std::vector<std::vector<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows[0].size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n, const T& one, const T& zero = T()) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Matrix scaled(const T& c) const {
        Matrix r = *this;
        for (auto& v : r.data_) v = v * c;
        return r;
    }

    // Gauss-Jordan inverse; throws if singular.
    Matrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: not square");
        std::size_t n = rows_;
        Matrix a = *this;
        T one, zero;
        // derive one/zero from an entry: rely on T being value-constructible as 0
        // and supporting x/x for nonzero x.
        Matrix inv(n, n);
        bool have_one = false;
        for (const auto& v : a.data_)
            if (!v.is_zero() && !have_one) {
                one = v / v;
                have_one = true;
            }
        if (!have_one) throw std::invalid_argument("Matrix: singular (zero matrix)");
        inv = identity(n, one);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && a(piv, col).is_zero()) ++piv;
            if (piv == n) throw std::invalid_argument("Matrix: singular");
            if (piv != col) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            }
            T d = a(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(col, j) = a(col, j) / d;
                inv(col, j) = inv(col, j) / d;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || a(i, col).is_zero()) continue;
                T c = a(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a(i, j) = a(i, j) - c * a(col, j);
                    inv(i, j) = inv(i, j) - c * inv(col, j);
                }
            }
        }
        return inv;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

}  // namespace traceforge
