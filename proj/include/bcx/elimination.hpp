#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "bcx/complex_matrix.hpp"
#include "bcx/error.hpp"
#include "bcx/scalar.hpp"

namespace bcx {

/*
 * Elimination over a complex scalar backend.
 *
 * Rank, exact mode: fraction-free (Bareiss) elimination. Pivot tests are
 * exact zero tests, so the reported rank is the true rank whenever the
 * scalar arithmetic is exact.
 *
 * Rank, approx mode: standard row elimination with partial pivoting. A
 * pivot counts only when its magnitude exceeds
 * pivot_tolerance * (largest entry magnitude of the initial matrix).
 *
 * Solving: Gauss-Jordan reduction to reduced row echelon form. The
 * particular solution sets every free variable to 0; the kernel basis has
 * one vector per free column, with that free variable set to 1 and all
 * other free variables 0. Pivot choice is deterministic (first nonzero in
 * exact mode), so results are reproducible byte for byte.
 */

namespace detail {

template <typename S>
double max_entry_magnitude(const Matrix<S>& M) {
    double best = 0.0;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            best = std::max(best, scalar_traits<S>::magnitude(M(i, j)));
    return best;
}

template <typename S>
std::size_t rank_fraction_free(Matrix<S> M) {
    const std::size_t m = M.rows();
    const std::size_t n = M.cols();
    std::size_t r = 0;
    S prev(1);
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        while (piv < m && M(piv, col).is_zero()) ++piv;
        if (piv == m) continue;
        M.swap_rows(r, piv);
        const S p = M(r, col);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                M(i, j) = (p * M(i, j) - M(i, col) * M(r, j)) / prev;
            }
            M(i, col) = S(0);
        }
        prev = p;
        ++r;
    }
    return r;
}

template <typename S>
std::size_t rank_tolerance_pivoted(Matrix<S> M, double tol) {
    const std::size_t m = M.rows();
    const std::size_t n = M.cols();
    const double threshold = tol * max_entry_magnitude(M);
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = r;
        double best = scalar_traits<S>::magnitude(M(r, col));
        for (std::size_t i = r + 1; i < m; ++i) {
            double mag = scalar_traits<S>::magnitude(M(i, col));
            if (mag > best) {
                best = mag;
                piv = i;
            }
        }
        if (!(best > threshold)) continue;
        M.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < m; ++i) {
            S factor = M(i, col) / M(r, col);
            M(i, col) = S(0);
            if (factor.is_zero()) continue;
            for (std::size_t j = col + 1; j < n; ++j) {
                M(i, j) -= factor * M(r, j);
            }
        }
        ++r;
    }
    return r;
}

}  // namespace detail

/// Rank of a complex matrix under the given policy. Empty matrices have rank 0.
template <typename S>
std::size_t complex_rank(const Matrix<S>& M, const RankPolicy& policy) {
    if (M.rows() == 0 || M.cols() == 0) return 0;
    if (policy.mode == PivotMode::Exact) return detail::rank_fraction_free(M);
    return detail::rank_tolerance_pivoted(M, policy.pivot_tolerance);
}

template <typename S>
struct RowEchelonForm {
    Matrix<S> mat;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with the policy's pivot selection.
template <typename S>
RowEchelonForm<S> reduced_row_echelon(Matrix<S> M, const RankPolicy& policy) {
    const std::size_t m = M.rows();
    const std::size_t n = M.cols();
    const bool exact = policy.mode == PivotMode::Exact;
    const double threshold =
        exact ? 0.0 : policy.pivot_tolerance * detail::max_entry_magnitude(M);

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        std::size_t piv = m;
        if (exact) {
            for (std::size_t i = r; i < m; ++i) {
                if (!M(i, col).is_zero()) {
                    piv = i;
                    break;
                }
            }
        } else {
            double best = threshold;
            for (std::size_t i = r; i < m; ++i) {
                double mag = scalar_traits<S>::magnitude(M(i, col));
                if (mag > best) {
                    best = mag;
                    piv = i;
                }
            }
        }
        if (piv == m) continue;
        M.swap_rows(r, piv);
        const S p = M(r, col);
        M(r, col) = S(1);
        for (std::size_t j = col + 1; j < n; ++j) M(r, j) /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || M(i, col).is_zero()) continue;
            S factor = M(i, col);
            M(i, col) = S(0);
            for (std::size_t j = col + 1; j < n; ++j) {
                M(i, j) -= factor * M(r, j);
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return RowEchelonForm<S>{std::move(M), std::move(pivots)};
}

/// Basis of the homogeneous kernel, one vector per free column.
template <typename S>
std::vector<std::vector<S>> null_space(const Matrix<S>& M, const RankPolicy& policy) {
    const std::size_t n = M.cols();
    RowEchelonForm<S> re = reduced_row_echelon(M, policy);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : re.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<S>> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(n, S(0));
        v[f] = S(1);
        for (std::size_t k = 0; k < re.pivot_cols.size(); ++k) {
            v[re.pivot_cols[k]] = -re.mat(k, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename S>
struct AffineSolution {
    std::vector<S> particular;
    std::vector<std::vector<S>> kernel_basis;
};

/// Solves M x = b. Returns nothing when the system is inconsistent
/// (rank of the augmented matrix exceeds the rank of M).
template <typename S>
std::optional<AffineSolution<S>> complex_solve(const Matrix<S>& M,
                                               const std::vector<S>& b,
                                               const RankPolicy& policy) {
    if (M.rows() != b.size()) {
        throw DimensionMismatch("solve: right-hand side length differs from row count");
    }
    const std::size_t n = M.cols();
    RowEchelonForm<S> re = reduced_row_echelon(M.with_column(b), policy);
    if (!re.pivot_cols.empty() && re.pivot_cols.back() == n) {
        return std::nullopt;
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : re.pivot_cols) is_pivot[c] = true;

    AffineSolution<S> sol;
    sol.particular.assign(n, S(0));
    for (std::size_t k = 0; k < re.pivot_cols.size(); ++k) {
        sol.particular[re.pivot_cols[k]] = re.mat(k, n);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<S> v(n, S(0));
        v[f] = S(1);
        for (std::size_t k = 0; k < re.pivot_cols.size(); ++k) {
            v[re.pivot_cols[k]] = -re.mat(k, f);
        }
        sol.kernel_basis.push_back(std::move(v));
    }
    return sol;
}

}  // namespace bcx
