#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace sigma {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p" and "p/q"; q must be nonzero. Result is normalized.
Rational parse_rational(const std::string& text);

// Canonical form "p/q" with q > 0 and gcd(p, q) = 1, e.g. "-3/2", "0/1".
std::string format_rational(const Rational& value);

}  // namespace sigma
