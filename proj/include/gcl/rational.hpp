#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gcl {

// Exact arbitrary-precision rational scalar. Always stored reduced with a
// positive denominator; equality is decidable and nothing ever rounds.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

Integer factorial(int n);

// "num/den", with "/den" omitted when the denominator is 1.
std::string to_string(const Rational& r);

// Inverse of to_string: optional leading '-', digits, optional "/digits".
Rational parse_rational(std::string_view text);

}  // namespace gcl
