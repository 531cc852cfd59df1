#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bcx/bicomplex_matrix.hpp"
#include "bcx/elimination.hpp"
#include "bcx/error.hpp"
#include "bcx/rank.hpp"

namespace bcx {

/*
 * Linear systems A*X = B over the bicomplex ring.
 *
 * Everything reduces to the two complex component systems: A*X = B is
 * consistent iff both 1A*x = 1B and 2A*y = 2B are, the kernel of X -> A*X
 * is spanned by e1-lifted kernel vectors of 1A together with e2-lifted
 * kernel vectors of 2A, and the full solution set is that kernel
 * translated by any particular solution. Solution counts are governed by
 * the modified rank k = rank(1A) + rank(2A): the nullity is 2n - k.
 */

/// Basis of the kernel of X -> A*X.
template <typename S>
struct KernelBasis {
    /// Basis of the kernel of the first component matrix.
    std::vector<std::vector<S>> from_first;
    /// Basis of the kernel of the second component matrix.
    std::vector<std::vector<S>> from_second;
    /// Bicomplex kernel vectors: each from_first vector times e1, then each
    /// from_second vector times e2 (in that order, for stable output).
    std::vector<BicomplexVector<S>> lifted;
};

enum class SolutionStatus { Inconsistent, Unique, Infinite };

/// Full description of the solution set of A*X = B: empty, a point, or a
/// point plus the kernel.
template <typename S>
struct SolutionSet {
    SolutionStatus status = SolutionStatus::Inconsistent;
    /// A particular solution (free variables zero); absent iff inconsistent.
    std::optional<BicomplexVector<S>> particular;
    /// Kernel of the homogeneous part — present even for inconsistent
    /// systems, where it still describes the solution geometry of A*X = 0.
    KernelBasis<S> kernel;
    /// Dimension of the kernel: 2n - modified_rank(A).
    std::size_t nullity = 0;
};

/// Kernel of X -> A*X, assembled from the two component kernels.
template <typename S>
KernelBasis<S> kernel_basis(const BicomplexMatrix<S>& A, const RankPolicy& policy) {
    KernelBasis<S> k;
    k.from_first = null_space(A.first(), policy);
    k.from_second = null_space(A.second(), policy);
    const std::vector<S> zero(A.cols(), S(0));
    k.lifted.reserve(k.from_first.size() + k.from_second.size());
    for (const auto& v : k.from_first) {
        k.lifted.push_back(BicomplexVector<S>::join(v, zero));
    }
    for (const auto& w : k.from_second) {
        k.lifted.push_back(BicomplexVector<S>::join(zero, w));
    }
    return k;
}

/// Consistency by the component criterion: both component systems must
/// leave their ranks unchanged under augmentation.
template <typename S>
bool is_consistent(const BicomplexMatrix<S>& A, const BicomplexVector<S>& B,
                   const RankPolicy& policy) {
    if (A.rows() != B.size()) {
        throw DimensionMismatch("consistency: right-hand side length differs from row count");
    }
    const bool first_ok =
        complex_rank(A.first().with_column(B.first()), policy) ==
        complex_rank(A.first(), policy);
    const bool second_ok =
        complex_rank(A.second().with_column(B.second()), policy) ==
        complex_rank(A.second(), policy);
    return first_ok && second_ok;
}

/// Consistency by the modified-rank criterion: augmenting B must not raise
/// the modified rank. Provably equivalent to is_consistent; computed by a
/// different route so the equivalence stays testable.
template <typename S>
bool consistent_via_modified_rank(const BicomplexMatrix<S>& A, const BicomplexVector<S>& B,
                                  const RankPolicy& policy) {
    if (A.rows() != B.size()) {
        throw DimensionMismatch("consistency: right-hand side length differs from row count");
    }
    return modified_rank(augment(A, B), policy) == modified_rank(A, policy);
}

/// Solves A*X = B by solving the two complex component systems. The kernel
/// is computed unconditionally; a particular solution exists iff both
/// component systems are solvable.
template <typename S>
SolutionSet<S> solve(const BicomplexMatrix<S>& A, const BicomplexVector<S>& B,
                     const RankPolicy& policy) {
    if (A.rows() != B.size()) {
        throw DimensionMismatch("solve: right-hand side length differs from row count");
    }
    SolutionSet<S> out;
    out.kernel = kernel_basis(A, policy);
    out.nullity = out.kernel.lifted.size();

    auto s1 = complex_solve(A.first(), B.first(), policy);
    auto s2 = complex_solve(A.second(), B.second(), policy);
    if (!s1 || !s2) {
        out.status = SolutionStatus::Inconsistent;
        return out;
    }
    out.particular = BicomplexVector<S>::join(s1->particular, s2->particular);
    out.status = out.nullity == 0 ? SolutionStatus::Unique : SolutionStatus::Infinite;
    return out;
}

enum class HomogeneousClass { UniqueZero, Infinite, AllOfSpace };

/// Classifies A*X = 0 from the modified rank k alone: the zero solution is
/// unique iff k = 2n; every vector solves it iff k = 0 (i.e. A = 0); any
/// intermediate k leaves an infinite solution set.
template <typename S>
HomogeneousClass classify_homogeneous(const BicomplexMatrix<S>& A, const RankPolicy& policy) {
    const std::size_t k = modified_rank(A, policy);
    const std::size_t n = A.cols();
    if (k == 2 * n) return HomogeneousClass::UniqueZero;
    if (k == 0) return HomogeneousClass::AllOfSpace;
    return HomogeneousClass::Infinite;
}

/// The five a-priori outcomes for A*X = B with B != 0, determined by the
/// modified rank k and the shape (m, n) alone. Two of them are genuinely
/// ambiguous without looking at B.
enum class SystemCase {
    NoSolution,         ///< k = 0: the zero map cannot reach a nonzero B
    UniqueSolution,     ///< k = 2m, m = n: both components square full-rank
    InfiniteSolutions,  ///< k = 2m, m < n: onto with free variables left over
    NoOrUnique,         ///< k = 2n, n < m: injective but maybe not onto
    NoOrInfinite        ///< anything else
};

struct NonHomogeneousClassification {
    SystemCase apriori;
    /// The definite outcome once B is consulted; agrees with solve().status.
    SolutionStatus resolved;
};

/// Classifies A*X = B (B != 0): the shape-and-rank case the theory promises
/// a priori, plus the resolved outcome from a consistency check.
template <typename S>
NonHomogeneousClassification classify_nonhomogeneous(const BicomplexMatrix<S>& A,
                                                     const BicomplexVector<S>& B,
                                                     const RankPolicy& policy) {
    if (A.rows() != B.size()) {
        throw DimensionMismatch("classify: right-hand side length differs from row count");
    }
    if (B.is_zero()) {
        throw ZeroRightHandSide();
    }
    const std::size_t k = modified_rank(A, policy);
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();

    NonHomogeneousClassification out{};
    if (k == 0) {
        out.apriori = SystemCase::NoSolution;
    } else if (k == 2 * m && m == n) {
        out.apriori = SystemCase::UniqueSolution;
    } else if (k == 2 * m && m < n) {
        out.apriori = SystemCase::InfiniteSolutions;
    } else if (k == 2 * n && n < m) {
        out.apriori = SystemCase::NoOrUnique;
    } else {
        out.apriori = SystemCase::NoOrInfinite;
    }

    if (!is_consistent(A, B, policy)) {
        out.resolved = SolutionStatus::Inconsistent;
    } else {
        out.resolved = (2 * n == k) ? SolutionStatus::Unique : SolutionStatus::Infinite;
    }
    return out;
}

/// Scale measure used for approx-mode residual checks: the largest entry
/// magnitude of the vector.
template <typename S>
double sup_magnitude(const BicomplexVector<S>& v) {
    double best = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        best = std::max(best, magnitude(v[k]));
    }
    return best;
}

/// Does Y solve A*X = B? Exact mode compares exactly; approx mode accepts a
/// residual below 1e-8 scaled by the size of A's rows and of Y.
template <typename S>
bool verify_membership(const BicomplexMatrix<S>& A, const BicomplexVector<S>& B,
                       const BicomplexVector<S>& Y, const RankPolicy& policy) {
    if (A.rows() != B.size()) {
        throw DimensionMismatch("verify: right-hand side length differs from row count");
    }
    if (A.cols() != Y.size()) {
        throw DimensionMismatch("verify: candidate length differs from column count");
    }
    const BicomplexVector<S> AY = apply(A, Y);
    if (policy.mode == PivotMode::Exact) {
        return AY == B;
    }
    double max_row_norm = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < A.cols(); ++j) row += magnitude(A(i, j));
        max_row_norm = std::max(max_row_norm, row);
    }
    const double tol = 1e-8 * (1.0 + max_row_norm) * (1.0 + sup_magnitude(Y));
    double residual = 0.0;
    for (std::size_t i = 0; i < B.size(); ++i) {
        residual = std::max(residual, magnitude(AY[i] - B[i]));
    }
    return residual <= tol;
}

}  // namespace bcx
