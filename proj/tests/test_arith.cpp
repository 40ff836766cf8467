#include "doctest.h"

#include "picard/arith.hpp"
#include "picard/errors.hpp"

using namespace picard;

TEST_CASE("parse_bigint reads signed decimal strings of any length") {
    CHECK(parse_bigint("0") == 0);
    CHECK(parse_bigint("-17") == -17);
    CHECK(parse_bigint("+5") == 5);
    const BigInt big = parse_bigint("123456789012345678901234567890");
    CHECK(big.str() == "123456789012345678901234567890");
    CHECK_THROWS_AS(parse_bigint(""), ParseError);
    CHECK_THROWS_AS(parse_bigint("-"), ParseError);
    CHECK_THROWS_AS(parse_bigint("12a"), ParseError);
    CHECK_THROWS_AS(parse_bigint("1.5"), ParseError);
}

TEST_CASE("gcd and lcm are nonnegative") {
    CHECK(gcd(-12, 18) == 6);
    CHECK(gcd(0, -7) == 7);
    CHECK(gcd(0, 0) == 0);
    CHECK(lcm(-4, 6) == 12);
    CHECK(lcm(0, 6) == 0);
}

TEST_CASE("floor division and modulus round toward negative infinity") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(floor_div(-7, -2) == 3);
    CHECK(floor_mod(-7, 3) == 2);
    CHECK(floor_mod(7, -3) == 1);
    CHECK(floor_of(Rational(-7, 2)) == -4);
    CHECK(ceil_of(Rational(-7, 2)) == -3);
    CHECK(ceil_of(Rational(6, 3)) == 2);
}

TEST_CASE("integer square roots") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(15) == 3);
    CHECK(isqrt(16) == 4);
    CHECK(exact_sqrt(144) == BigInt(12));
    CHECK_FALSE(exact_sqrt(145).has_value());
    CHECK_FALSE(exact_sqrt(-4).has_value());
    const BigInt r = parse_bigint("99999999999999999999");
    CHECK(exact_sqrt(r * r) == r);
}

TEST_CASE("vector helpers") {
    CHECK(content({4, -6, 10}) == 2);
    CHECK(primitive_part({4, -6, 10}) == IntVector{2, -3, 5});
    CHECK(primitive_part({0, 0}) == IntVector{0, 0});
    CHECK(clear_denominators({Rational(1, 2), Rational(-2, 3), 1}) == IntVector{3, -4, 6});
    CHECK(is_zero({0, 0, 0}));
    CHECK_FALSE(is_zero({0, 1}));
    CHECK(dot(IntVector{1, 2, 3}, IntVector{4, -5, 6}) == 12);
}
