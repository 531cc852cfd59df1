#pragma once

#include <array>
#include <cmath>
#include <utility>

#include "bcx/error.hpp"
#include "bcx/scalar.hpp"

namespace bcx {

/// Ring classification of a bicomplex value. ZeroDivisor means the value is
/// nonzero but has exactly one vanishing idempotent component, so it divides
/// zero (its partner idempotent annihilates it).
enum class BiComplexClass { Zero, Invertible, ZeroDivisor };

/*
 * A bicomplex number xi = z1 + i2*z2 over a complex scalar backend S, where
 * z1, z2 are complex over the first unit i1 and i2 is a second, commuting
 * imaginary unit (i1^2 = i2^2 = -1, i1*i2 = i2*i1 =: j).
 *
 * The idempotent view rewrites xi = a*e1 + b*e2 with e1 = (1+j)/2,
 * e2 = (1-j)/2, a = z1 - i1*z2, b = z1 + i1*z2. Because e1*e2 = 0 and
 * e_k^2 = e_k, multiplication is componentwise in (a, b) — the fact the
 * whole matrix theory here leans on. Storage is canonical (z1, z2);
 * multiplication deliberately uses the canonical formula so the
 * componentwise law stays an independently checkable property.
 */
template <typename S>
class BiComplex {
public:
    using scalar_type = S;
    using real_type = typename scalar_traits<S>::real_type;

    BiComplex() : z1_(0), z2_(0) {}
    BiComplex(S z1, S z2 = S(0)) : z1_(std::move(z1)), z2_(std::move(z2)) {}

    /// Builds u1 + i1*u2 + i2*u3 + j*u4 from four real coefficients.
    static BiComplex from_components(const real_type& u1, const real_type& u2,
                                     const real_type& u3, const real_type& u4) {
        return BiComplex(S(u1, u2), S(u3, u4));
    }

    /// The four real coefficients (u1, u2, u3, u4) of the canonical form.
    std::array<real_type, 4> components() const {
        return {z1_.real(), z1_.imag(), z2_.real(), z2_.imag()};
    }

    const S& z1() const { return z1_; }
    const S& z2() const { return z2_; }

    /// Idempotent components (z1 - i1*z2, z1 + i1*z2).
    std::pair<S, S> to_idempotent() const {
        const S iz2 = S::i() * z2_;
        return {z1_ - iz2, z1_ + iz2};
    }

    /// Inverse of to_idempotent: z1 = (a+b)/2, z2 = i1*(a-b)/2.
    static BiComplex from_idempotent(const S& a, const S& b) {
        const S two(2);
        return BiComplex((a + b) / two, S::i() * (a - b) / two);
    }

    bool is_zero() const { return z1_.is_zero() && z2_.is_zero(); }

    BiComplexClass classify() const {
        auto [a, b] = to_idempotent();
        if (a.is_zero() && b.is_zero()) return BiComplexClass::Zero;
        if (a.is_zero() || b.is_zero()) return BiComplexClass::ZeroDivisor;
        return BiComplexClass::Invertible;
    }

    /// Multiplicative inverse, via componentwise reciprocal of the
    /// idempotent view. Defined exactly for Invertible values.
    BiComplex inverse() const {
        auto [a, b] = to_idempotent();
        if (a.is_zero() || b.is_zero()) {
            throw NotInvertible();
        }
        const S one(1);
        return from_idempotent(one / a, one / b);
    }

    friend BiComplex operator+(const BiComplex& x, const BiComplex& y) {
        return BiComplex(x.z1_ + y.z1_, x.z2_ + y.z2_);
    }
    friend BiComplex operator-(const BiComplex& x, const BiComplex& y) {
        return BiComplex(x.z1_ - y.z1_, x.z2_ - y.z2_);
    }
    friend BiComplex operator-(const BiComplex& x) {
        return BiComplex(-x.z1_, -x.z2_);
    }
    // (z1 + i2 z2)(w1 + i2 w2) = (z1 w1 - z2 w2) + i2 (z1 w2 + z2 w1)
    friend BiComplex operator*(const BiComplex& x, const BiComplex& y) {
        return BiComplex(x.z1_ * y.z1_ - x.z2_ * y.z2_,
                         x.z1_ * y.z2_ + x.z2_ * y.z1_);
    }
    BiComplex& operator+=(const BiComplex& y) { return *this = *this + y; }
    BiComplex& operator-=(const BiComplex& y) { return *this = *this - y; }
    BiComplex& operator*=(const BiComplex& y) { return *this = *this * y; }

    friend bool operator==(const BiComplex& x, const BiComplex& y) {
        return x.z1_ == y.z1_ && x.z2_ == y.z2_;
    }
    friend bool operator!=(const BiComplex& x, const BiComplex& y) {
        return !(x == y);
    }

    static BiComplex zero() { return BiComplex(); }
    static BiComplex one() { return BiComplex(S(1)); }
    static BiComplex i1() { return BiComplex(S::i()); }
    static BiComplex i2() { return BiComplex(S(0), S(1)); }
    /// j = i1*i2, the hyperbolic unit; j^2 = +1.
    static BiComplex j() { return BiComplex(S(0), S::i()); }
    /// e1 = (1 + j)/2, idempotent with to_idempotent() = (1, 0).
    static BiComplex e1() { return from_idempotent(S(1), S(0)); }
    /// e2 = (1 - j)/2, idempotent with to_idempotent() = (0, 1).
    static BiComplex e2() { return from_idempotent(S(0), S(1)); }

private:
    S z1_;
    S z2_;
};

inline BiComplex<FloatComplex> to_float(const BiComplex<ExactComplex>& x) {
    return BiComplex<FloatComplex>(to_float(x.z1()), to_float(x.z2()));
}

/// Euclidean magnitude of the four real coefficients, as a double.
template <typename S>
double magnitude(const BiComplex<S>& x) {
    return std::hypot(scalar_traits<S>::magnitude(x.z1()),
                      scalar_traits<S>::magnitude(x.z2()));
}

}  // namespace bcx
