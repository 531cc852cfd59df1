#pragma once

#include <charconv>
#include <string>
#include <system_error>

#include "bcx/bicomplex.hpp"
#include "bcx/bicomplex_matrix.hpp"
#include "bcx/error.hpp"
#include "bcx/scalar.hpp"

namespace bcx {

/*
 * Canonical, locale-independent text output. The canonical literal form is
 * the four-coefficient sum over units 1, i1, i2, j with zero terms omitted
 * ("0" when everything vanishes) and coefficients always explicit, so
 * formatting then reparsing is the identity on exact values.
 */

/// Rational as "p" or "p/q" (canonical lowest terms, sign on the numerator).
inline std::string format_real(const Rational& r) { return r.str(); }

/// Shortest round-trip decimal form, locale-free.
inline std::string format_real(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace detail {

/// Appends "c unit" to a sum under construction, folding the sign into the
/// separator. Skips zero coefficients entirely.
template <typename R>
void append_term(std::string& out, const R& coeff, const char* unit) {
    if (coeff == R(0)) return;
    const bool negative = coeff < R(0);
    if (out.empty()) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    out += format_real(negative ? R(-coeff) : coeff);
    if (unit[0] != '\0') {
        out += ' ';
        out += unit;
    }
}

}  // namespace detail

/// Complex scalar as a literal over the unit "i": "0", "3/2", "-1 i",
/// "2 - 1/3 i", ...
template <typename S>
std::string format_complex(const S& z) {
    std::string out;
    detail::append_term(out, z.real(), "");
    detail::append_term(out, z.imag(), "i");
    return out.empty() ? "0" : out;
}

/// Bicomplex value in the canonical four-coefficient form.
template <typename S>
std::string format_literal(const BiComplex<S>& x) {
    const auto u = x.components();
    std::string out;
    detail::append_term(out, u[0], "");
    detail::append_term(out, u[1], "i1");
    detail::append_term(out, u[2], "i2");
    detail::append_term(out, u[3], "j");
    return out.empty() ? "0" : out;
}

/// Matrix in the input file format: header "rows cols", rows of
/// " | "-separated canonical literals.
template <typename S>
std::string format_matrix(const BicomplexMatrix<S>& A) {
    std::string out = std::to_string(A.rows()) + ' ' + std::to_string(A.cols()) + '\n';
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) {
            if (j) out += " | ";
            out += format_literal(A(i, j));
        }
        out += '\n';
    }
    return out;
}

/// Complex matrix in the same layout (entries over the unit "i").
template <typename S>
std::string format_complex_matrix(const Matrix<S>& M) {
    std::string out = std::to_string(M.rows()) + ' ' + std::to_string(M.cols()) + '\n';
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            if (j) out += " | ";
            out += format_complex(M(i, j));
        }
        out += '\n';
    }
    return out;
}

/// Vector in the one-column matrix file format (reusable as an input file).
template <typename S>
std::string format_vector(const BicomplexVector<S>& v) {
    std::string out = std::to_string(v.size()) + " 1\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
        out += format_literal(v[k]);
        out += '\n';
    }
    return out;
}

}  // namespace bcx
