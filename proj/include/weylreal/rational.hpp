#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace weylreal {

/// All coefficients in the library are exact rationals; there is no floating
/// point anywhere. Backed by boost::multiprecision, which keeps values in
/// canonical form (reduced, positive denominator).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" with q > 0 after sign normalization.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Renders as "p" or "p/q" (q omitted when 1); inverse of parse_rational.
std::string to_string(const Rational& value);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace weylreal
