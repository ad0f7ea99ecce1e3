#pragma once

#include "wheel/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wheel {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) {
            throw std::invalid_argument("matrix dimensions must be positive");
        }
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows)
        : Matrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            std::size_t j = 0;
            for (const auto& v : row) (*this)(i, j++) = v;
            ++i;
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const T& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
        return (*this)(i, j);
    }

    /// Copy with row `r` and column `c` deleted.
    Matrix without(std::size_t r, std::size_t c) const {
        if (rows_ < 2 || cols_ < 2) throw std::invalid_argument("matrix too small to reduce");
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
        Matrix out(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
            if (i == r) continue;
            for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
                if (j == c) continue;
                out(oi, oj++) = (*this)(i, j);
            }
            ++oi;
        }
        return out;
    }

    template <typename U>
    Matrix<U> cast() const {
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = U((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
        if (a.cols_ != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
        std::vector<T> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * x[j];
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << '[';
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
            os << "]\n";
        }
        return os;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<BigInt>;

}  // namespace wheel
