#include <catch2/catch_amalgamated.hpp>

#include "bcx/bicomplex.hpp"
#include "support/oracles.hpp"

using namespace bcx;
using BC = BiComplex<ExactComplex>;

TEST_CASE("idempotent elements satisfy their defining identities") {
    CHECK(BC::e1() * BC::e1() == BC::e1());
    CHECK(BC::e2() * BC::e2() == BC::e2());
    CHECK(BC::e1() * BC::e2() == BC::zero());
    CHECK(BC::e2() * BC::e1() == BC::zero());
    CHECK(BC::e1() + BC::e2() == BC::one());
    CHECK(BC::e1() == BC::from_components(make_rational(1, 2), 0, 0, make_rational(1, 2)));
}

TEST_CASE("unit table: two imaginary units and the hyperbolic unit") {
    CHECK(BC::i1() * BC::i1() == -BC::one());
    CHECK(BC::i2() * BC::i2() == -BC::one());
    CHECK(BC::i1() * BC::i2() == BC::j());
    CHECK(BC::i2() * BC::i1() == BC::j());
    CHECK(BC::j() * BC::j() == BC::one());
}

TEST_CASE("from_components builds the canonical form") {
    CHECK(BC::from_components(1, 0, 0, 0) == BC::one());
    CHECK(BC::from_components(make_rational(1, 2), 0, 0, make_rational(1, 2)) == BC::e1());

    // (0,1,1,0) = i1 + i2 has idempotent view (0, 2 i1)
    const BC x = BC::from_components(0, 1, 1, 0);
    const auto [a, b] = x.to_idempotent();
    CHECK(a == ExactComplex(0));
    CHECK(b == ExactComplex(Rational(0), Rational(2)));
}

TEST_CASE("to_idempotent on distinguished values") {
    CHECK(BC::one().to_idempotent() == std::pair{ExactComplex(1), ExactComplex(1)});
    CHECK(BC::e1().to_idempotent() == std::pair{ExactComplex(1), ExactComplex(0)});
    CHECK(BC::e2().to_idempotent() == std::pair{ExactComplex(0), ExactComplex(1)});
    const auto [a, b] = BC::i2().to_idempotent();
    CHECK(a == ExactComplex(Rational(0), Rational(-1)));
    CHECK(b == ExactComplex::i());
}

TEST_CASE("from_idempotent inverts to_idempotent") {
    CHECK(BC::from_idempotent(ExactComplex(1), ExactComplex(0)) == BC::e1());
    CHECK(BC::from_idempotent(ExactComplex(1), ExactComplex(1)) == BC::one());

    // (2, 4) recombines to 3 - j
    const BC x = BC::from_idempotent(ExactComplex(2), ExactComplex(4));
    CHECK(x == BC::from_components(3, 0, 0, -1));
    const auto [a, b] = x.to_idempotent();
    CHECK(a == ExactComplex(2));
    CHECK(b == ExactComplex(4));

    oracle::Rng rng(20240811);
    for (int t = 0; t < 500; ++t) {
        const BC v = rng.bicomplex();
        const auto [p, q] = v.to_idempotent();
        CHECK(BC::from_idempotent(p, q) == v);
    }
}

TEST_CASE("multiplication agrees with the four-coefficient expansion") {
    oracle::Rng rng(20240812);
    for (int t = 0; t < 500; ++t) {
        const BC x = rng.bicomplex();
        const BC y = rng.bicomplex();
        const BC expected = oracle::from_quad(oracle::quad_mul(oracle::quad_of(x),
                                                               oracle::quad_of(y)));
        REQUIRE(x * y == expected);
    }
    // worked instance: (1 + i2)(1 - i2) = 1 - i2^2 = 2
    CHECK((BC::one() + BC::i2()) * (BC::one() - BC::i2()) == BC(ExactComplex(2)));
}

TEST_CASE("multiplication is componentwise in the idempotent view") {
    oracle::Rng rng(20240813);
    for (int t = 0; t < 1000; ++t) {
        const BC x = rng.bicomplex();
        const BC y = rng.bicomplex();
        const auto [x1, x2] = x.to_idempotent();
        const auto [y1, y2] = y.to_idempotent();
        const auto [p1, p2] = (x * y).to_idempotent();
        REQUIRE(p1 == x1 * y1);
        REQUIRE(p2 == x2 * y2);
    }
}

TEST_CASE("classification separates zero, zero divisors, and units") {
    CHECK(BC::zero().classify() == BiComplexClass::Zero);
    CHECK(BC::e1().classify() == BiComplexClass::ZeroDivisor);
    CHECK(BC::e2().classify() == BiComplexClass::ZeroDivisor);
    CHECK(BC::one().classify() == BiComplexClass::Invertible);
    CHECK(BC::i2().classify() == BiComplexClass::Invertible);

    // 2 e1 + e2 is invertible with inverse (1/2) e1 + e2
    const BC v = BC::from_idempotent(ExactComplex(2), ExactComplex(1));
    CHECK(v.classify() == BiComplexClass::Invertible);
    const BC w = BC::from_idempotent(ExactComplex(make_rational(1, 2)), ExactComplex(1));
    CHECK(v.inverse() == w);
    CHECK(v * w == BC::one());
}

TEST_CASE("every zero divisor annihilates a nonzero partner") {
    oracle::Rng rng(20240814);
    int seen = 0;
    for (int t = 0; t < 2000 && seen < 50; ++t) {
        // force zero divisors by zeroing one idempotent component
        const BC raw = rng.bicomplex();
        const auto [a, b] = raw.to_idempotent();
        if (a.is_zero() && b.is_zero()) continue;
        const BC zd = rng.raw()() % 2 ? BC::from_idempotent(a.is_zero() ? ExactComplex(1) : a,
                                                            ExactComplex(0))
                                      : BC::from_idempotent(ExactComplex(0),
                                                            b.is_zero() ? ExactComplex(1) : b);
        REQUIRE(zd.classify() == BiComplexClass::ZeroDivisor);
        const BC partner = zd.to_idempotent().first.is_zero() ? BC::e1() : BC::e2();
        REQUIRE_FALSE(partner.is_zero());
        REQUIRE(zd * partner == BC::zero());
        ++seen;
    }
    REQUIRE(seen == 50);
}

TEST_CASE("inverse is exact and total on invertible values") {
    CHECK(BC::one().inverse() == BC::one());
    CHECK(BC(ExactComplex(2)).inverse() == BC(ExactComplex(make_rational(1, 2))));
    CHECK(BC::i2().inverse() == -BC::i2());
    CHECK(BC::i2() * -BC::i2() == BC::one());

    CHECK_THROWS_AS(BC::zero().inverse(), NotInvertible);
    CHECK_THROWS_AS(BC::e1().inverse(), NotInvertible);
    CHECK_THROWS_AS(BC::e2().inverse(), NotInvertible);

    oracle::Rng rng(20240815);
    for (int t = 0; t < 1000; ++t) {
        const BC v = rng.invertible_bicomplex();
        REQUIRE(v * v.inverse() == BC::one());
    }
}

TEST_CASE("float backend mirrors exact arithmetic within rounding") {
    using BF = BiComplex<FloatComplex>;
    const BF x = to_float(BC::from_components(make_rational(1, 2), -3, 0, 2));
    const BF y = to_float(BC::from_components(1, 0, make_rational(-3, 4), 0));
    const BC xe = BC::from_components(make_rational(1, 2), -3, 0, 2);
    const BC ye = BC::from_components(1, 0, make_rational(-3, 4), 0);
    const BF exact_product = to_float(xe * ye);
    const BF product = x * y;
    CHECK(magnitude(product - exact_product) <= 1e-12 * (1.0 + magnitude(exact_product)));

    const auto [a, b] = x.to_idempotent();
    CHECK(magnitude(BF::from_idempotent(a, b) - x) <= 1e-12);
}
