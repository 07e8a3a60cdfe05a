#include "doctest.h"

#include "prismreal/rational.hpp"

using namespace prismreal;

TEST_CASE("parse_rational accepts p/q and bare integers")
{
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7/21") == Rational(-1, 3));
    CHECK(parse_rational(" 42 ") == Rational(42));
    CHECK(parse_rational("0/5") == Rational(0));
    CHECK(parse_rational("123456789012345678901234567890/3").get_num()
          == Integer("41152263004115226300411522630"));
}

TEST_CASE("parse_rational rejects malformed input")
{
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_integer("12x"), ParseError);
}

TEST_CASE("to_string always prints a denominator")
{
    CHECK(to_string(Rational(0)) == "0/1");
    CHECK(to_string(make_rational(-3, 9)) == "-1/3");
    CHECK(to_string(Rational(5)) == "5/1");
}

TEST_CASE("power handles negative exponents")
{
    CHECK(power(Rational(1, 10), 3) == Rational(1, 1000));
    CHECK(power(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(power(Rational(-1, 2), 3) == Rational(-1, 8));
    CHECK(power(Rational(7, 5), 0) == Rational(1));
    CHECK_THROWS_AS(power(Rational(0), -1), UsageError);
}

TEST_CASE("to_decimal truncates and marks terminating values")
{
    auto pi = to_decimal(Rational(314159, 100000), 10);
    CHECK(pi.text == "3.14159");
    CHECK(pi.exact);

    auto third = to_decimal(Rational(1, 3), 6);
    CHECK(third.text == "0.333333");
    CHECK_FALSE(third.exact);

    auto neg = to_decimal(Rational(-1, 2), 3);
    CHECK(neg.text == "-0.5");
    CHECK(neg.exact);

    CHECK(to_decimal(Rational(0), 4).text == "0");
}
