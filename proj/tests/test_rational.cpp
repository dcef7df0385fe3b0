#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "lamcalc/rational.hpp"

using lamcalc::Rational;

TEST_CASE("parse reduces to canonical form") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational::parse("-4/6") == Rational(-2, 3));
    CHECK(Rational::parse("0/7") == Rational(0));
    CHECK(Rational::parse("007") == Rational(7));
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(Rational::parse("7/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("+3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
}

TEST_CASE("canonical invariants") {
    const Rational r(-4, -6);
    CHECK(r == Rational(2, 3));
    CHECK(r.den() > 0);
    CHECK(Rational(0, 5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("pow") {
    CHECK(Rational(3, 2).pow(2) == Rational(9, 4));
    CHECK(Rational(7, 3).pow(0) == Rational(1));
    CHECK(Rational(0).pow(0) == Rational(1));
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("arithmetic and ordering") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(3, 4) == Rational(2, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(5, 3).inverse() == Rational(3, 5));
    CHECK(Rational(-5, 3).inverse() == Rational(-3, 5));
    CHECK(Rational(-5, 3).inverse().den() > 0);
}

TEST_CASE("printing") {
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(0).str() == "0");
    CHECK(lamcalc::str({Rational(1, 2), Rational(-1, 2)}) == "[1/2, -1/2]");
}

TEST_CASE("round-trip through text") {
    for (long n = -20; n <= 20; ++n)
        for (long d = 1; d <= 7; ++d) {
            const Rational r(n, d);
            CHECK(Rational::parse(r.str()) == r);
        }
}
