#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace koebe {

// Always kept in lowest terms by the backend.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integers and finite decimals ("0.25", "-1.5e-1"); decimals
// are converted exactly (0.25 -> 1/4).
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace koebe
