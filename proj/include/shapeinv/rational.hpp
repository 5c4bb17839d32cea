#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace shapeinv {

// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p", "p/q" and finite decimals like "-3.25".
Rational parse_rational(std::string_view text);

// Canonical form: "p" or "p/q" with q > 1.
std::string rational_to_string(const Rational& r);

double to_double(const Rational& r);

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace shapeinv
