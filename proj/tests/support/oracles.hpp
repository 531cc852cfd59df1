#pragma once

// Independent reference implementations ("oracles") the tests check the
// library against, plus deterministic random generators. Everything here is
// deliberately written by a different route than the library:
//  - multiplication expands over the four real coefficients and the unit
//    table (1, i1, i2, j), never touching the (z1, z2) representation;
//  - rank enumerates minors with cofactor determinants, never eliminating.

#include <array>
#include <cstddef>
#include <random>
#include <vector>

#include "bcx/bcx.hpp"

namespace oracle {

using bcx::BigInt;
using bcx::Rational;

/// Four real coefficients (u1, u2, u3, u4) of u1 + i1 u2 + i2 u3 + j u4.
using Quad = std::array<Rational, 4>;

/// Product by brute expansion over the unit table:
/// i1*i1 = i2*i2 = -1, j*j = +1, i1*i2 = j, i1*j = -i2, i2*j = -i1.
inline Quad quad_mul(const Quad& a, const Quad& b) {
    return Quad{
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] + a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] + a[2] * b[0] - a[1] * b[3] - a[3] * b[1],
        a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1],
    };
}

inline Quad quad_of(const bcx::BiComplex<bcx::ExactComplex>& x) {
    return x.components();
}

inline bcx::BiComplex<bcx::ExactComplex> from_quad(const Quad& q) {
    return bcx::BiComplex<bcx::ExactComplex>::from_components(q[0], q[1], q[2], q[3]);
}

/// Cofactor determinant of a square complex matrix.
inline bcx::ExactComplex minor_det(const bcx::Matrix<bcx::ExactComplex>& M,
                                   const std::vector<std::size_t>& rows,
                                   const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    if (k == 1) return M(rows[0], cols[0]);
    bcx::ExactComplex det(0);
    bcx::ExactComplex sign(1);
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        std::vector<std::size_t> sub_cols;
        for (std::size_t d = 0; d < k; ++d)
            if (d != c) sub_cols.push_back(cols[d]);
        det = det + sign * M(rows[0], cols[c]) * minor_det(M, sub_rows, sub_cols);
        sign = bcx::ExactComplex(0) - sign;
    }
    return det;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

/// Rank as the largest size of a nonvanishing minor. Exponential; fine for
/// the small matrices the tests use.
inline std::size_t minor_rank(const bcx::Matrix<bcx::ExactComplex>& M) {
    const std::size_t m = M.rows(), n = M.cols();
    for (std::size_t k = std::min(m, n); k >= 1; --k) {
        std::vector<std::size_t> rows(k);
        for (std::size_t i = 0; i < k; ++i) rows[i] = i;
        do {
            std::vector<std::size_t> cols(k);
            for (std::size_t i = 0; i < k; ++i) cols[i] = i;
            do {
                if (!minor_det(M, rows, cols).is_zero()) return k;
            } while (next_combination(cols, n));
        } while (next_combination(rows, m));
    }
    return 0;
}

/// Deterministic generator of small rationals: integer part in [-3, 3],
/// denominator in {1, 2, 3}.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    Rational small_rational() {
        std::uniform_int_distribution<int> num(-3, 3);
        std::uniform_int_distribution<int> den(1, 3);
        return bcx::make_rational(BigInt(num(gen_)), BigInt(den(gen_)));
    }

    /// Integer-valued rational in [-3, 3]; exactly representable in binary64.
    Rational small_integer() {
        std::uniform_int_distribution<int> num(-3, 3);
        return Rational(num(gen_));
    }

    bcx::BiComplex<bcx::ExactComplex> bicomplex(bool integer_parts = false) {
        auto draw = [&] { return integer_parts ? small_integer() : small_rational(); };
        const Rational u1 = draw(), u2 = draw(), u3 = draw(), u4 = draw();
        return bcx::BiComplex<bcx::ExactComplex>::from_components(u1, u2, u3, u4);
    }

    bcx::BiComplex<bcx::ExactComplex> invertible_bicomplex() {
        while (true) {
            auto x = bicomplex();
            if (x.classify() == bcx::BiComplexClass::Invertible) return x;
        }
    }

    bcx::BicomplexMatrix<bcx::ExactComplex> matrix(std::size_t m, std::size_t n,
                                                   bool integer_parts = false) {
        std::vector<bcx::BiComplex<bcx::ExactComplex>> e;
        e.reserve(m * n);
        for (std::size_t k = 0; k < m * n; ++k) e.push_back(bicomplex(integer_parts));
        return bcx::BicomplexMatrix<bcx::ExactComplex>(m, n, std::move(e));
    }

    bcx::BicomplexVector<bcx::ExactComplex> vector(std::size_t n,
                                                   bool integer_parts = false) {
        std::vector<bcx::BiComplex<bcx::ExactComplex>> e;
        e.reserve(n);
        for (std::size_t k = 0; k < n; ++k) e.push_back(bicomplex(integer_parts));
        return bcx::BicomplexVector<bcx::ExactComplex>(std::move(e));
    }

    std::size_t index(std::size_t lo, std::size_t hi) {  // inclusive
        std::uniform_int_distribution<std::size_t> d(lo, hi);
        return d(gen_);
    }

    std::mt19937& raw() { return gen_; }

private:
    std::mt19937 gen_;
};

/// Converts an exact matrix to the binary64 backend entrywise.
inline bcx::BicomplexMatrix<bcx::FloatComplex> to_float_matrix(
    const bcx::BicomplexMatrix<bcx::ExactComplex>& A) {
    std::vector<bcx::BiComplex<bcx::FloatComplex>> e;
    e.reserve(A.rows() * A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) e.push_back(bcx::to_float(A(i, j)));
    return bcx::BicomplexMatrix<bcx::FloatComplex>(A.rows(), A.cols(), std::move(e));
}

inline bcx::BicomplexVector<bcx::FloatComplex> to_float_vector(
    const bcx::BicomplexVector<bcx::ExactComplex>& v) {
    std::vector<bcx::BiComplex<bcx::FloatComplex>> e;
    e.reserve(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) e.push_back(bcx::to_float(v[k]));
    return bcx::BicomplexVector<bcx::FloatComplex>(std::move(e));
}

}  // namespace oracle
