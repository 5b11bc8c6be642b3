#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tamecover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form used everywhere in the JSON interfaces: "7", "-3/2".
// Denominator is omitted when it equals one; the value is always reduced.
std::string to_string(const Rational& r);

// Accepts "p", "p/q" with optional leading '-'. Rejects zero denominators.
Rational parse_rational(const std::string& s);

BigInt parse_bigint(const std::string& s);

// num/den with the sign carried by the numerator; den != 0. The two-argument
// cpp_rational constructor rejects negative denominators outright.
inline Rational make_ratio(long num, long den)
{
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline BigInt gcd(const BigInt& a, const BigInt& b)
{
    return boost::multiprecision::gcd(a, b);
}

// q^e for exact integer arithmetic; e >= 0.
BigInt ipow(const BigInt& base, unsigned long e);

// Binomial coefficient as exact integer; zero outside the triangle.
BigInt binomial(long n, long k);

} // namespace tamecover
