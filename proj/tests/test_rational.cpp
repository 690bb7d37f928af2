#include "doctest.h"

#include "planar/rational.hpp"

using planar::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-6, -9).str() == "2/3");
    CHECK(Rational(0, 7).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), planar::Error);
}

TEST_CASE("from_string accepts reduced and unreduced text") {
    CHECK(Rational::from_string("10/15") == Rational(2, 3));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("0/9").is_zero());
    CHECK_THROWS_AS(Rational::from_string("1/0"), planar::Error);
    CHECK_THROWS_AS(Rational::from_string("a/b"), planar::Error);
    CHECK_THROWS_AS(Rational::from_string(""), planar::Error);
}

TEST_CASE("field arithmetic") {
    Rational a(3, 4);
    Rational b(-2, 5);
    CHECK(a + b == Rational(7, 20));
    CHECK(a - b == Rational(23, 20));
    CHECK(a * b == Rational(-3, 10));
    CHECK(a / b == Rational(-15, 8));
    CHECK(a * a.inverse() == Rational(1));
    CHECK((a + b) - b == a);
    CHECK_THROWS_AS(a / Rational(0), planar::Error);
    CHECK_THROWS_AS(Rational(0).inverse(), planar::Error);
}

TEST_CASE("comparison sign and abs") {
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(-3, 7).abs() == Rational(3, 7));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
}

TEST_CASE("pow handles negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow(-1), planar::Error);
}

TEST_CASE("numerator and denominator text") {
    Rational r(-10, 15);
    CHECK(r.numerator_str() == "-2");
    CHECK(r.denominator_str() == "3");
    CHECK(planar::int_pow(3, 4) == 81);
    CHECK_THROWS_AS(planar::int_pow(2, -1), planar::Error);
}
