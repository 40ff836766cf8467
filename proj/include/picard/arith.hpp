#pragma once

// Exact integer and rational scalars plus the handful of helpers the rest of
// the library leans on. Nothing in this library touches floating point except
// the SVG renderer.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace picard {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;
using RatMatrix = std::vector<RatVector>;

inline BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

/// Nonnegative gcd; gcd(0, 0) == 0.
inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return abs_value(boost::multiprecision::gcd(abs_value(a), abs_value(b)));
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return abs_value(a / gcd(a, b) * b);
}

/// Quotient rounded toward negative infinity. `b` must be nonzero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

/// Representative of `a` in [0, |m|).
inline BigInt floor_mod(const BigInt& a, const BigInt& m) {
    BigInt mm = abs_value(m);
    BigInt r = a % mm;
    if (r < 0) r += mm;
    return r;
}

/// floor(sqrt(n)) for n >= 0.
inline BigInt isqrt(const BigInt& n) {
    BigInt r;
    return boost::multiprecision::sqrt(n, r);
}

/// Exact square root when `n` is a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r;
    BigInt s = boost::multiprecision::sqrt(n, r);
    if (r != 0) return std::nullopt;
    return s;
}

inline BigInt floor_of(const Rational& q) {
    return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline BigInt ceil_of(const Rational& q) { return -floor_of(Rational(-q)); }

inline std::string to_string(const BigInt& a) { return a.str(); }

/// Parses an optionally signed decimal integer; throws ParseError on junk.
BigInt parse_bigint(std::string_view text);

/// gcd of all entries (0 for the zero vector).
BigInt content(const IntVector& v);

/// Divides out the content; the zero vector is returned unchanged.
IntVector primitive_part(const IntVector& v);

/// Scales a rational vector by the lcm of its denominators.
IntVector clear_denominators(const RatVector& v);

RatVector to_rational(const IntVector& v);

bool is_zero(const IntVector& v);

BigInt dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

}  // namespace picard
