#include <doctest.h>

#include <sstream>

#include "macopp/core/rational.hpp"

using macopp::Rational;

TEST_CASE("rational normalizes sign and common factors") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0, 5).den() == 1);
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational parses integers, decimals and fractions") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("1.25") == Rational(5, 4));
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("1.2.3"));
}

TEST_CASE("rational prints terminating values as decimals") {
    CHECK(Rational(7, 2).str() == "3.5");
    CHECK(Rational(15).str() == "15");
    CHECK(Rational(-1, 4).str() == "-0.25");
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK(Rational(100, 7).str() == "100/7");
    std::ostringstream os;
    os << Rational(3, 8);
    CHECK(os.str() == "0.375");
}

TEST_CASE("rational string form round-trips") {
    for (auto r : {Rational(1, 3), Rational(-22, 7), Rational(5, 16), Rational(0), Rational(123456789, 1000)})
        CHECK(Rational::parse(r.str()) == r);
}

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS(a / Rational(0));
    CHECK(Rational(1, 2) * Rational(4) + Rational(1, 2) * Rational(3) == Rational(7, 2));
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3) > Rational(5, 2));
    CHECK(Rational(1, 3) <= Rational(1, 3));
    // Cross-multiplication must not overflow for large operands.
    Rational big(INT64_MAX / 3, 7), big2(INT64_MAX / 3 - 1, 7);
    CHECK(big2 < big);
}

TEST_CASE("rational to_double") {
    CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
    CHECK(Rational(-7, 2).to_double() == doctest::Approx(-3.5));
}
