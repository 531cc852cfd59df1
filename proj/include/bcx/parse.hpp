#pragma once

#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/bicomplex_matrix.hpp"
#include "bcx/error.hpp"
#include "bcx/scalar.hpp"

namespace bcx {

/*
 * Text input.
 *
 * Bicomplex literal: a sign-separated sum of terms over the basis units
 * 1, i1, i2, j (j = i1*i2), e.g. "1/2 + 1/2 j" or "2 - 3/4 i1 + 0.5 i2".
 * Coefficients are rationals "p/q" or decimals (exponent notation allowed);
 * a bare unit means coefficient 1. Each unit may appear at most once and
 * whitespace is insignificant. The idempotent form "[a ; b]" gives the two
 * idempotent components as complex literals over "i", e.g. "[0 ; 1]", and
 * is materialized through from_idempotent.
 *
 * Matrix file: a header line "rows cols", then one line per row with
 * entries separated by "|". Blank lines and trailing whitespace are
 * ignored. A vector is a one-column matrix.
 *
 * Coefficients are parsed exactly (as rationals) and only then converted
 * to the target backend, so the exact backend round-trips decimals with no
 * binary noise.
 */

namespace detail {

/// Parsed literal, backend-independent: four exact rational coefficients,
/// canonical (u1, u2, u3, u4) or idempotent (a_re, a_im, b_re, b_im).
struct ParsedLiteral {
    bool idempotent = false;
    std::array<Rational, 4> c{};
};

class LiteralParser {
public:
    LiteralParser(std::string_view text, std::size_t line, std::size_t col)
        : s_(text), line_(line), col_(col) {}

    ParsedLiteral parse() {
        ParsedLiteral out;
        skip_ws();
        if (!eof() && peek() == '[') {
            out.idempotent = true;
            take();
            parse_sum(/*imag_only=*/true, out.c[0], out.c[1], ";]");
            expect(';', "';' between idempotent components");
            parse_sum(/*imag_only=*/true, out.c[2], out.c[3], "]");
            expect(']', "']' closing the idempotent form");
        } else {
            parse_canonical(out.c);
        }
        skip_ws();
        if (!eof()) fail("end of literal");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(line_, col_, expected);
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char take() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) take();
    }
    void expect(char c, const std::string& what) {
        skip_ws();
        if (eof() || peek() != c) fail(what);
        take();
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_alpha(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }

    std::string take_digits() {
        std::string d;
        while (!eof() && is_digit(peek())) d.push_back(take());
        return d;
    }

    // Not BigInt's string constructor: that one treats a leading 0 as octal.
    static BigInt digits_to_bigint(const std::string& digits) {
        BigInt v = 0;
        for (char c : digits) v = v * 10 + (c - '0');
        return v;
    }

    std::string take_ident() {
        std::string id;
        while (!eof() && (is_alpha(peek()) || is_digit(peek()))) id.push_back(take());
        return id;
    }

    /// "p/q", "123", "1.25", "2e-3", ... — parsed exactly.
    Rational parse_number() {
        std::string int_part = take_digits();
        if (int_part.empty()) fail("a number");
        if (!eof() && peek() == '/') {
            take();
            skip_ws();
            std::string den = take_digits();
            if (den.empty()) fail("a denominator");
            BigInt d = digits_to_bigint(den);
            if (d == 0) fail("a nonzero denominator");
            return make_rational(digits_to_bigint(int_part), d);
        }
        std::string frac_part;
        if (!eof() && peek() == '.') {
            take();
            frac_part = take_digits();
            if (frac_part.empty()) fail("digits after the decimal point");
        }
        long exponent = 0;
        if (!eof() && (peek() == 'e' || peek() == 'E')) {
            take();
            bool neg = false;
            if (!eof() && (peek() == '+' || peek() == '-')) neg = take() == '-';
            std::string ed = take_digits();
            if (ed.empty()) fail("digits in the exponent");
            if (ed.size() > 4) fail("an exponent below 10000");
            exponent = std::stol(ed);
            if (neg) exponent = -exponent;
        }
        Rational r(digits_to_bigint(int_part + frac_part));
        long net = exponent - static_cast<long>(frac_part.size());
        if (net > 0) {
            r *= Rational(BigInt(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(net))));
        } else if (net < 0) {
            r /= Rational(BigInt(boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-net))));
        }
        return r;
    }

    /// One sign-separated sum writing into the real/imaginary slots of a
    /// complex component ("i" is the only unit).
    void parse_sum(bool imag_only, Rational& re, Rational& im, std::string_view stops) {
        std::array<std::optional<Rational>, 4> slots;
        parse_terms(imag_only, slots, stops);
        re = slots[0].value_or(Rational(0));
        im = slots[1].value_or(Rational(0));
    }

    void parse_canonical(std::array<Rational, 4>& c) {
        std::array<std::optional<Rational>, 4> slots;
        parse_terms(/*imag_only=*/false, slots, "");
        for (std::size_t k = 0; k < 4; ++k) c[k] = slots[k].value_or(Rational(0));
    }

    void parse_terms(bool imag_only, std::array<std::optional<Rational>, 4>& slots,
                     std::string_view stops) {
        const char* unit_hint = imag_only ? "a number or the unit i" : "a number or a unit i1, i2, j";
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            if (!eof() && (peek() == '+' || peek() == '-')) {
                // separator before a later term, or a sign opening the first
                sign = take() == '-' ? -1 : 1;
                skip_ws();
            } else if (!first) {
                break;  // no separator: end of sum (caller checks terminator)
            }
            // term: coefficient, unit, or both
            Rational coeff(1);
            bool saw_coeff = false;
            if (!eof() && is_digit(peek())) {
                coeff = parse_number();
                saw_coeff = true;
            }
            skip_ws();
            std::size_t slot;
            if (!eof() && is_alpha(peek())) {
                const std::size_t uline = line_, ucol = col_;
                std::string unit = take_ident();
                if (imag_only) {
                    if (unit != "i") throw ParseError(uline, ucol, "the unit i");
                    slot = 1;
                } else if (unit == "i1") {
                    slot = 1;
                } else if (unit == "i2") {
                    slot = 2;
                } else if (unit == "j") {
                    slot = 3;
                } else {
                    throw ParseError(uline, ucol, "a unit i1, i2, or j");
                }
            } else if (saw_coeff) {
                slot = 0;
            } else {
                fail(unit_hint);
            }
            if (slots[slot]) fail("each unit at most once in a literal");
            slots[slot] = sign < 0 ? Rational(-coeff) : coeff;
            first = false;
            skip_ws();
            if (eof()) break;
            if (stops.find(peek()) != std::string_view::npos) break;
            if (peek() != '+' && peek() != '-') {
                fail(stops.empty() ? "'+' or '-'" : "'+', '-', or the end of the component");
            }
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col_;
};

template <typename S>
BiComplex<S> materialize(const ParsedLiteral& p) {
    using traits = scalar_traits<S>;
    if (p.idempotent) {
        return BiComplex<S>::from_idempotent(
            S(traits::real_from_rational(p.c[0]), traits::real_from_rational(p.c[1])),
            S(traits::real_from_rational(p.c[2]), traits::real_from_rational(p.c[3])));
    }
    return BiComplex<S>::from_components(
        traits::real_from_rational(p.c[0]), traits::real_from_rational(p.c[1]),
        traits::real_from_rational(p.c[2]), traits::real_from_rational(p.c[3]));
}

struct Line {
    std::string_view text;
    std::size_t number;  // 1-based
};

inline bool blank(std::string_view s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

/// Non-blank lines with their 1-based numbers.
inline std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0, number = 1;
    for (std::size_t k = 0; k <= text.size(); ++k) {
        if (k == text.size() || text[k] == '\n') {
            std::string_view line = text.substr(start, k - start);
            if (!blank(line)) lines.push_back(Line{line, number});
            start = k + 1;
            ++number;
        }
    }
    return lines;
}

inline std::size_t parse_header_number(std::string_view line, std::size_t line_no,
                                       std::size_t& pos) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
    if (pos == start) {
        throw ParseError(line_no, start + 1, "a matrix header 'rows cols'");
    }
    unsigned long long v = 0;
    for (std::size_t k = start; k < pos; ++k) {
        v = v * 10 + static_cast<unsigned long long>(line[k] - '0');
        if (v > 100000) throw ParseError(line_no, start + 1, "a dimension below 100000");
    }
    return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Parses one bicomplex literal (whitespace-insensitive, must consume the
/// whole string).
template <typename S>
BiComplex<S> parse_literal(std::string_view text) {
    detail::LiteralParser p(text, 1, 1);
    return detail::materialize<S>(p.parse());
}

/// Parses the matrix file format: header "rows cols", then rows of
/// '|'-separated literals. Positions in errors refer to the whole text.
template <typename S>
BicomplexMatrix<S> parse_matrix(std::string_view text) {
    std::vector<detail::Line> lines = detail::significant_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "a matrix header 'rows cols'");

    std::size_t pos = 0;
    const detail::Line header = lines[0];
    const std::size_t m = detail::parse_header_number(header.text, header.number, pos);
    const std::size_t n = detail::parse_header_number(header.text, header.number, pos);
    while (pos < header.text.size() &&
           std::isspace(static_cast<unsigned char>(header.text[pos])))
        ++pos;
    if (pos != header.text.size()) {
        throw ParseError(header.number, pos + 1, "the end of the header line");
    }

    const std::size_t expect_rows = (m > 0 && n > 0) ? m : 0;
    if (lines.size() < 1 + expect_rows) {
        throw ParseError(lines.back().number + 1, 1,
                         std::to_string(m) + " matrix rows");
    }
    if (lines.size() > 1 + expect_rows) {
        throw ParseError(lines[1 + expect_rows].number, 1, "the end of the matrix");
    }

    std::vector<BiComplex<S>> entries;
    entries.reserve(m * n);
    for (std::size_t r = 0; r < expect_rows; ++r) {
        const detail::Line line = lines[1 + r];
        // split on '|', keeping column offsets for error positions
        std::vector<std::pair<std::string_view, std::size_t>> cells;
        std::size_t start = 0;
        for (std::size_t k = 0; k <= line.text.size(); ++k) {
            if (k == line.text.size() || line.text[k] == '|') {
                cells.emplace_back(line.text.substr(start, k - start), start + 1);
                start = k + 1;
            }
        }
        if (cells.size() != n) {
            throw DimensionMismatch("matrix row " + std::to_string(r + 1) + " has " +
                                    std::to_string(cells.size()) + " entries, expected " +
                                    std::to_string(n));
        }
        for (const auto& [cell, col] : cells) {
            detail::LiteralParser p(cell, line.number, col);
            entries.push_back(detail::materialize<S>(p.parse()));
        }
    }
    return BicomplexMatrix<S>(m, n, std::move(entries));
}

/// Parses a vector as a one-column matrix file.
template <typename S>
BicomplexVector<S> parse_vector(std::string_view text) {
    BicomplexMatrix<S> M = parse_matrix<S>(text);
    if (M.cols() != 1 && M.rows() != 0) {
        throw DimensionMismatch("vector file must have exactly one column, got " +
                                std::to_string(M.cols()));
    }
    std::vector<BiComplex<S>> entries;
    entries.reserve(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) entries.push_back(M(i, 0));
    return BicomplexVector<S>(std::move(entries));
}

}  // namespace bcx
