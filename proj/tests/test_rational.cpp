#include <doctest.h>

#include <sstream>

#include "gwcp1/rational.hpp"

using namespace gwcp1;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).denominator() == "1");
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), Error);

    // no drift over many operations
    Rational sum(0);
    for (long k = 1; k <= 50; ++k) sum += Rational(1, k) - Rational(1, k + 1);
    CHECK(sum == Rational(50, 51));
}

TEST_CASE("string round trips") {
    CHECK(Rational::parse("-7/3") == Rational(-7, 3));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::from_strings("10", "-4") == Rational(-5, 2));
    CHECK(Rational::from_strings("10", "-4").numerator() == "-5");
    CHECK(Rational::from_strings("10", "-4").denominator() == "2");
    CHECK_THROWS_AS(Rational::from_strings("x", "1"), Error);
    CHECK_THROWS_AS(Rational::from_strings("1", "0"), Error);

    std::ostringstream os;
    os << Rational(22, 7);
    CHECK(os.str() == "22/7");
}

TEST_CASE("big values stay exact") {
    Rational big = factorial(30);
    CHECK(big.denominator() == "1");
    CHECK(big.numerator() == "265252859812191058636308480000000");
    CHECK(binomial(60, 30) == factorial(60) / (factorial(30) * factorial(30)));
    CHECK(binomial(5, 9) == Rational(0));
}
