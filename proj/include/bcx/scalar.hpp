#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "bcx/error.hpp"

namespace bcx {

/// Arbitrary-precision rational, kept in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Builds num/den for any sign of den; the two-argument Rational
/// constructor only accepts positive denominators.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return Rational(std::move(num)) / Rational(std::move(den));
}

enum class PivotMode { Exact, Approx };

/// Pivot-selection policy for all rank and solve routines. Exact mode
/// ignores pivot_tolerance entirely; Approx mode accepts a pivot only when
/// its magnitude exceeds pivot_tolerance times the largest entry magnitude
/// of the initial matrix.
struct RankPolicy {
    PivotMode mode = PivotMode::Exact;
    double pivot_tolerance = 1e-10;

    static RankPolicy exact() { return RankPolicy{PivotMode::Exact, 0.0}; }
    static RankPolicy approx(double tol = 1e-10) {
        return RankPolicy{PivotMode::Approx, tol};
    }

    friend bool operator==(const RankPolicy& a, const RankPolicy& b) {
        if (a.mode != b.mode) return false;
        if (a.mode == PivotMode::Exact) return true;
        return a.pivot_tolerance == b.pivot_tolerance;
    }
    friend bool operator!=(const RankPolicy& a, const RankPolicy& b) { return !(a == b); }
};

/// Exact complex scalar: a Gaussian rational re + im*i.
class ExactComplex {
public:
    using Real = Rational;

    ExactComplex() = default;
    ExactComplex(Rational re, Rational im = Rational(0))
        : re_(std::move(re)), im_(std::move(im)) {}
    ExactComplex(int n) : re_(n) {}  // NOLINT: implicit by design, mirrors int -> C

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    static ExactComplex i() { return ExactComplex(Rational(0), Rational(1)); }

    ExactComplex operator-() const { return ExactComplex(-re_, -im_); }

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return ExactComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return ExactComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return ExactComplex(a.re_ * b.re_ - a.im_ * b.im_,
                            a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
        if (b.is_zero()) throw DivisionByZero();
        Rational norm = b.re_ * b.re_ + b.im_ * b.im_;
        return ExactComplex((a.re_ * b.re_ + a.im_ * b.im_) / norm,
                            (a.im_ * b.re_ - a.re_ * b.im_) / norm);
    }

    ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
    ExactComplex& operator-=(const ExactComplex& o) { return *this = *this - o; }
    ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }
    ExactComplex& operator/=(const ExactComplex& o) { return *this = *this / o; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) {
        return !(a == b);
    }

private:
    Rational re_;
    Rational im_;
};

/// Binary64 complex scalar. Operations on finite inputs either return a
/// finite value or throw; NaN is never produced or propagated.
class FloatComplex {
public:
    using Real = double;

    FloatComplex() = default;
    FloatComplex(double re, double im = 0.0) : re_(re), im_(im) {}
    FloatComplex(int n) : re_(n) {}  // NOLINT: implicit by design

    double real() const { return re_; }
    double imag() const { return im_; }

    bool is_zero() const { return re_ == 0.0 && im_ == 0.0; }

    static FloatComplex i() { return FloatComplex(0.0, 1.0); }

    FloatComplex operator-() const { return FloatComplex(-re_, -im_); }

    friend FloatComplex operator+(const FloatComplex& a, const FloatComplex& b) {
        return checked(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend FloatComplex operator-(const FloatComplex& a, const FloatComplex& b) {
        return checked(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend FloatComplex operator*(const FloatComplex& a, const FloatComplex& b) {
        return checked(a.re_ * b.re_ - a.im_ * b.im_,
                       a.re_ * b.im_ + a.im_ * b.re_);
    }

    // Smith's algorithm; scales before dividing so |b| near the extremes of
    // the exponent range does not overflow the intermediate products.
    friend FloatComplex operator/(const FloatComplex& a, const FloatComplex& b) {
        double bmag = std::max(std::abs(b.re_), std::abs(b.im_));
        if (bmag < std::numeric_limits<double>::min()) {
            throw DivisionByZero("complex divisor below the underflow guard");
        }
        if (std::abs(b.re_) >= std::abs(b.im_)) {
            double r = b.im_ / b.re_;
            double den = b.re_ + b.im_ * r;
            return checked((a.re_ + a.im_ * r) / den, (a.im_ - a.re_ * r) / den);
        }
        double r = b.re_ / b.im_;
        double den = b.re_ * r + b.im_;
        return checked((a.re_ * r + a.im_) / den, (a.im_ * r - a.re_) / den);
    }

    FloatComplex& operator+=(const FloatComplex& o) { return *this = *this + o; }
    FloatComplex& operator-=(const FloatComplex& o) { return *this = *this - o; }
    FloatComplex& operator*=(const FloatComplex& o) { return *this = *this * o; }
    FloatComplex& operator/=(const FloatComplex& o) { return *this = *this / o; }

    friend bool operator==(const FloatComplex& a, const FloatComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const FloatComplex& a, const FloatComplex& b) {
        return !(a == b);
    }

private:
    static FloatComplex checked(double re, double im) {
        if (!std::isfinite(re) || !std::isfinite(im)) throw Overflow();
        return FloatComplex(re, im);
    }

    double re_ = 0.0;
    double im_ = 0.0;
};

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<ExactComplex> {
    static constexpr bool is_exact = true;
    using real_type = Rational;

    static real_type real_from_rational(const Rational& r) { return r; }
    static double magnitude(const ExactComplex& z) {
        return std::hypot(z.real().convert_to<double>(), z.imag().convert_to<double>());
    }
};

template <>
struct scalar_traits<FloatComplex> {
    static constexpr bool is_exact = false;
    using real_type = double;

    static real_type real_from_rational(const Rational& r) {
        return r.convert_to<double>();
    }
    static double magnitude(const FloatComplex& z) {
        return std::hypot(z.real(), z.imag());
    }
};

inline FloatComplex to_float(const ExactComplex& z) {
    return FloatComplex(z.real().convert_to<double>(), z.imag().convert_to<double>());
}

}  // namespace bcx
