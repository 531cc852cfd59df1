#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bcx/error.hpp"
#include "bcx/scalar.hpp"

namespace bcx {

/// Dense row-major matrix over a complex scalar backend.
template <typename S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw DimensionMismatch("matrix data size does not match dimensions");
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix I(n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = S(1);
        return I;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const S& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }

    Matrix transpose() const {
        Matrix T(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
        return T;
    }

    /// New matrix with one extra column on the right.
    Matrix with_column(const std::vector<S>& col) const {
        if (col.size() != rows_) {
            throw DimensionMismatch("appended column length does not match row count");
        }
        Matrix R(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) R(i, j) = (*this)(i, j);
            R(i, cols_) = col[i];
        }
        return R;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "matrix addition");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
        return c;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "matrix subtraction");
        Matrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
        return c;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionMismatch("matrix product: inner dimensions differ");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += aik * b(k, j);
                }
            }
        }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw DimensionMismatch(std::string(op) + ": shapes differ");
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<S> data_;
};

template <typename S>
std::vector<S> mat_vec(const Matrix<S>& M, const std::vector<S>& x) {
    if (M.cols() != x.size()) {
        throw DimensionMismatch("matrix-vector product: dimensions differ");
    }
    std::vector<S> y(M.rows(), S(0));
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            y[i] += M(i, j) * x[j];
        }
    }
    return y;
}

}  // namespace bcx
