#pragma once

#include <cstddef>

#include "bcx/bicomplex_matrix.hpp"
#include "bcx/elimination.hpp"
#include "bcx/error.hpp"
#include "bcx/scalar.hpp"

namespace bcx {

/*
 * The rank quantities of a bicomplex matrix.
 *
 * Over the bicomplex ring, row span, column span and the idempotent
 * decomposition each give a notion of rank; the theory proves the three
 * idempotent-flavoured ones coincide (rho_ir = rho_ic = rho_mr =
 * rank(1A) + rank(2A)) while the plain row/column ranks can be strictly
 * smaller. Each quantity below is computed by its own route so those
 * identities stay executable checks, not definitional tautologies.
 */

/// All five rank quantities plus the two component ranks, tagged with the
/// pivoting policy that produced them.
struct RankReport {
    std::size_t rho_r = 0;   ///< row rank: rank of the row embedding (m x 2n)
    std::size_t rho_c = 0;   ///< column rank: rank of the column embedding (2m x n)
    std::size_t rho_ir = 0;  ///< idempotent row rank
    std::size_t rho_ic = 0;  ///< idempotent column rank
    std::size_t rho_mr = 0;  ///< modified rank, rank(1A) + rank(2A)
    std::size_t rho_1 = 0;   ///< rank of the first component matrix
    std::size_t rho_2 = 0;   ///< rank of the second component matrix
    RankPolicy policy;

    /// Equality of the seven numbers. Reports computed under different
    /// policies are not comparable: rank identities only hold within one
    /// pivoting regime, so mixing them is an error, not inequality.
    friend bool operator==(const RankReport& x, const RankReport& y) {
        if (!(x.policy == y.policy)) {
            throw PolicyMismatch();
        }
        return x.rho_r == y.rho_r && x.rho_c == y.rho_c && x.rho_ir == y.rho_ir &&
               x.rho_ic == y.rho_ic && x.rho_mr == y.rho_mr && x.rho_1 == y.rho_1 &&
               x.rho_2 == y.rho_2;
    }
    friend bool operator!=(const RankReport& x, const RankReport& y) { return !(x == y); }
};

/// Dimension of the row space: rank of the m x 2n row embedding.
template <typename S>
std::size_t row_rank(const BicomplexMatrix<S>& A, const RankPolicy& policy) {
    return complex_rank(embed_rows(A), policy);
}

/// Dimension of the column space: rank of the 2m x n column embedding.
template <typename S>
std::size_t column_rank(const BicomplexMatrix<S>& A, const RankPolicy& policy) {
    return complex_rank(embed_cols(A), policy);
}

/// rank(1A) + rank(2A), computed from the components as stored.
template <typename S>
std::size_t idempotent_row_rank(const BicomplexMatrix<S>& A, const RankPolicy& policy) {
    return complex_rank(A.first(), policy) + complex_rank(A.second(), policy);
}

/// Same value by the column route: ranks of the transposed components.
/// Kept independent of idempotent_row_rank so their equality remains a
/// meaningful cross-check.
template <typename S>
std::size_t idempotent_column_rank(const BicomplexMatrix<S>& A, const RankPolicy& policy) {
    return complex_rank(A.first().transpose(), policy) +
           complex_rank(A.second().transpose(), policy);
}

/// The modified rank rank(1A) + rank(2A) — the quantity that governs
/// consistency and solution counts.
template <typename S>
std::size_t modified_rank(const BicomplexMatrix<S>& A, const RankPolicy& policy) {
    return complex_rank(A.first(), policy) + complex_rank(A.second(), policy);
}

/// All seven quantities in one report.
template <typename S>
RankReport rank_report(const BicomplexMatrix<S>& A, const RankPolicy& policy) {
    RankReport r;
    r.rho_r = row_rank(A, policy);
    r.rho_c = column_rank(A, policy);
    r.rho_1 = complex_rank(A.first(), policy);
    r.rho_2 = complex_rank(A.second(), policy);
    r.rho_ir = idempotent_row_rank(A, policy);
    r.rho_ic = idempotent_column_rank(A, policy);
    r.rho_mr = r.rho_1 + r.rho_2;
    r.policy = policy;
    return r;
}

}  // namespace bcx
