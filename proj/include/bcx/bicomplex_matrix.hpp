#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/complex_matrix.hpp"
#include "bcx/error.hpp"

namespace bcx {

/*
 * Vectors and dense matrices over the bicomplex ring.
 *
 * Every bicomplex matrix A decomposes uniquely as A = P*e1 + Q*e2 with
 * complex matrices P, Q (entrywise idempotent components). Both components
 * are computed eagerly at construction and kept alongside the entries:
 * all the rank and solving machinery works on them, and their coherence
 * with the entries is a checkable invariant rather than an assumption.
 * Values are immutable after construction; operations return new values.
 */

template <typename S>
class BicomplexVector {
public:
    BicomplexVector() = default;
    explicit BicomplexVector(std::size_t n) : entries_(n) { rebuild(); }
    explicit BicomplexVector(std::vector<BiComplex<S>> entries)
        : entries_(std::move(entries)) {
        rebuild();
    }

    /// Recombines two complex component vectors: entry k is
    /// from_idempotent(p[k], q[k]).
    static BicomplexVector join(const std::vector<S>& p, const std::vector<S>& q) {
        if (p.size() != q.size()) {
            throw DimensionMismatch("join: component vectors differ in length");
        }
        std::vector<BiComplex<S>> e;
        e.reserve(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) {
            e.push_back(BiComplex<S>::from_idempotent(p[k], q[k]));
        }
        return BicomplexVector(std::move(e));
    }

    std::size_t size() const { return entries_.size(); }
    const BiComplex<S>& operator[](std::size_t k) const { return entries_[k]; }

    /// First idempotent component, as a complex vector.
    const std::vector<S>& first() const { return first_; }
    /// Second idempotent component, as a complex vector.
    const std::vector<S>& second() const { return second_; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend BicomplexVector operator+(const BicomplexVector& x, const BicomplexVector& y) {
        if (x.size() != y.size()) throw DimensionMismatch("vector add: length mismatch");
        std::vector<BiComplex<S>> e;
        e.reserve(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) e.push_back(x[k] + y[k]);
        return BicomplexVector(std::move(e));
    }
    friend BicomplexVector operator-(const BicomplexVector& x, const BicomplexVector& y) {
        if (x.size() != y.size()) throw DimensionMismatch("vector sub: length mismatch");
        std::vector<BiComplex<S>> e;
        e.reserve(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) e.push_back(x[k] - y[k]);
        return BicomplexVector(std::move(e));
    }
    /// Scales by a bicomplex coefficient.
    friend BicomplexVector operator*(const BiComplex<S>& c, const BicomplexVector& x) {
        std::vector<BiComplex<S>> e;
        e.reserve(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) e.push_back(c * x[k]);
        return BicomplexVector(std::move(e));
    }

    friend bool operator==(const BicomplexVector& x, const BicomplexVector& y) {
        return x.entries_ == y.entries_;
    }
    friend bool operator!=(const BicomplexVector& x, const BicomplexVector& y) {
        return !(x == y);
    }

private:
    void rebuild() {
        first_.clear();
        second_.clear();
        first_.reserve(entries_.size());
        second_.reserve(entries_.size());
        for (const auto& e : entries_) {
            auto [a, b] = e.to_idempotent();
            first_.push_back(std::move(a));
            second_.push_back(std::move(b));
        }
    }

    std::vector<BiComplex<S>> entries_;
    std::vector<S> first_;
    std::vector<S> second_;
};

template <typename S>
class BicomplexMatrix {
public:
    BicomplexMatrix() : BicomplexMatrix(0, 0) {}
    BicomplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        rebuild();
    }
    BicomplexMatrix(std::size_t rows, std::size_t cols, std::vector<BiComplex<S>> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw DimensionMismatch("matrix construction: entry count differs from rows*cols");
        }
        rebuild();
    }

    static BicomplexMatrix identity(std::size_t n) {
        BicomplexMatrix I(n, n);
        for (std::size_t k = 0; k < n; ++k) I.entries_[k * n + k] = BiComplex<S>::one();
        I.rebuild();
        return I;
    }

    /// Recombines two complex component matrices into the bicomplex matrix
    /// P*e1 + Q*e2.
    static BicomplexMatrix join(const Matrix<S>& P, const Matrix<S>& Q) {
        if (P.rows() != Q.rows() || P.cols() != Q.cols()) {
            throw DimensionMismatch("join: component matrices differ in shape");
        }
        BicomplexMatrix A(P.rows(), P.cols());
        for (std::size_t i = 0; i < P.rows(); ++i)
            for (std::size_t j = 0; j < P.cols(); ++j)
                A.entries_[i * P.cols() + j] = BiComplex<S>::from_idempotent(P(i, j), Q(i, j));
        A.rebuild();
        return A;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const BiComplex<S>& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    /// First idempotent component matrix.
    const Matrix<S>& first() const { return first_; }
    /// Second idempotent component matrix.
    const Matrix<S>& second() const { return second_; }
    /// Both components as a pair (the unique decomposition).
    std::pair<Matrix<S>, Matrix<S>> split() const { return {first_, second_}; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    BicomplexMatrix transpose() const {
        BicomplexMatrix T(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                T.entries_[j * rows_ + i] = (*this)(i, j);
        T.rebuild();
        return T;
    }

    friend BicomplexMatrix operator+(const BicomplexMatrix& A, const BicomplexMatrix& B) {
        if (A.rows_ != B.rows_ || A.cols_ != B.cols_) {
            throw DimensionMismatch("matrix add: shape mismatch");
        }
        BicomplexMatrix C(A.rows_, A.cols_);
        for (std::size_t k = 0; k < A.entries_.size(); ++k)
            C.entries_[k] = A.entries_[k] + B.entries_[k];
        C.rebuild();
        return C;
    }
    friend BicomplexMatrix operator-(const BicomplexMatrix& A, const BicomplexMatrix& B) {
        if (A.rows_ != B.rows_ || A.cols_ != B.cols_) {
            throw DimensionMismatch("matrix sub: shape mismatch");
        }
        BicomplexMatrix C(A.rows_, A.cols_);
        for (std::size_t k = 0; k < A.entries_.size(); ++k)
            C.entries_[k] = A.entries_[k] - B.entries_[k];
        C.rebuild();
        return C;
    }
    // Direct bicomplex dot products, deliberately not routed through the
    // components: that split(A*B) = (1A*1B, 2A*2B) is then a property the
    // suite can check rather than the definition.
    friend BicomplexMatrix operator*(const BicomplexMatrix& A, const BicomplexMatrix& B) {
        if (A.cols_ != B.rows_) {
            throw DimensionMismatch("matrix mul: inner dimensions differ");
        }
        BicomplexMatrix C(A.rows_, B.cols_);
        for (std::size_t i = 0; i < A.rows_; ++i) {
            for (std::size_t k = 0; k < A.cols_; ++k) {
                const BiComplex<S>& a = A(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < B.cols_; ++j) {
                    C.entries_[i * B.cols_ + j] += a * B(k, j);
                }
            }
        }
        C.rebuild();
        return C;
    }

    friend bool operator==(const BicomplexMatrix& A, const BicomplexMatrix& B) {
        return A.rows_ == B.rows_ && A.cols_ == B.cols_ && A.entries_ == B.entries_;
    }
    friend bool operator!=(const BicomplexMatrix& A, const BicomplexMatrix& B) {
        return !(A == B);
    }

private:
    void rebuild() {
        first_ = Matrix<S>(rows_, cols_);
        second_ = Matrix<S>(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                auto [a, b] = entries_[i * cols_ + j].to_idempotent();
                first_(i, j) = std::move(a);
                second_(i, j) = std::move(b);
            }
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<BiComplex<S>> entries_;
    Matrix<S> first_;
    Matrix<S> second_;
};

/// A with the vector adjoined as an extra last column.
template <typename S>
BicomplexMatrix<S> augment(const BicomplexMatrix<S>& A, const BicomplexVector<S>& b) {
    if (A.rows() != b.size()) {
        throw DimensionMismatch("augment: column length differs from row count");
    }
    std::vector<BiComplex<S>> entries;
    entries.reserve(A.rows() * (A.cols() + 1));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) entries.push_back(A(i, j));
        entries.push_back(b[i]);
    }
    return BicomplexMatrix<S>(A.rows(), A.cols() + 1, std::move(entries));
}

/// The m x 2n complex matrix whose row k is (first-component row k |
/// second-component row k). Linear independence of bicomplex rows over the
/// complex scalars equals ordinary independence of the embedded rows.
template <typename S>
Matrix<S> embed_rows(const BicomplexMatrix<S>& A) {
    const std::size_t m = A.rows(), n = A.cols();
    Matrix<S> E(m, 2 * n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            E(i, j) = A.first()(i, j);
            E(i, n + j) = A.second()(i, j);
        }
    }
    return E;
}

/// The 2m x n complex matrix stacking the first component over the second;
/// column j is the stacked pair of component columns.
template <typename S>
Matrix<S> embed_cols(const BicomplexMatrix<S>& A) {
    const std::size_t m = A.rows(), n = A.cols();
    Matrix<S> E(2 * m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            E(i, j) = A.first()(i, j);
            E(m + i, j) = A.second()(i, j);
        }
    }
    return E;
}

/// A*X via the componentwise route: join of the two complex matrix-vector
/// products. Agrees with direct bicomplex dot products (a tested property).
template <typename S>
BicomplexVector<S> apply(const BicomplexMatrix<S>& A, const BicomplexVector<S>& X) {
    if (A.cols() != X.size()) {
        throw DimensionMismatch("apply: vector length differs from column count");
    }
    return BicomplexVector<S>::join(mat_vec(A.first(), X.first()),
                                    mat_vec(A.second(), X.second()));
}

}  // namespace bcx
