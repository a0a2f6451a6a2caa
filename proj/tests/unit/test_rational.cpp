#include "doctest.h"
#include "laumon/rational.hpp"

using namespace laumon;

TEST_CASE("rationals canonicalize and round-trip through strings") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational::parse("7/21") == Rational(1, 3));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(5).str() == "5");
    CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK((-a).str() == "-1/3");
    CHECK_THROWS_AS(a / Rational(0), NotAUnitError);
}

TEST_CASE("integer powers") {
    CHECK(Rational(2, 3).pow_int(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow_int(-2) == Rational(9, 4));
    CHECK(Rational(7).pow_int(0) == Rational(1));
}

TEST_CASE("generalized binomial coefficients") {
    // C(-1/2, 2) = 3/8
    CHECK(binomial(Rational(-1, 2), 2) == Rational(3, 8));
    CHECK(binomial(Rational(5), 2) == Rational(10));
    CHECK(binomial(Rational(1, 2), 0) == Rational(1));
}
