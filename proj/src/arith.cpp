#include "picard/arith.hpp"

#include "picard/errors.hpp"

#include <cctype>

namespace picard {

BigInt parse_bigint(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw ParseError("expected an integer, got \"" + std::string(text) + "\"");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("expected an integer, got \"" + std::string(text) + "\"");
    }
    std::string digits(text.substr(i));
    BigInt value(digits);
    return text[0] == '-' ? BigInt(-value) : value;
}

BigInt content(const IntVector& v) {
    BigInt g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

IntVector primitive_part(const IntVector& v) {
    BigInt g = content(v);
    if (g == 0 || g == 1) return v;
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

IntVector clear_denominators(const RatVector& v) {
    BigInt l = 1;
    for (const auto& x : v) l = lcm(l, boost::multiprecision::denominator(x));
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
    }
    return out;
}

RatVector to_rational(const IntVector& v) {
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

bool is_zero(const IntVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

BigInt dot(const IntVector& a, const IntVector& b) {
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace picard
