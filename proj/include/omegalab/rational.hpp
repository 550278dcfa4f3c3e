#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace omegalab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form "numerator/denominator" in lowest terms, denominator >= 1.
std::string fraction_string(const Rational& r);

// Accepts "num/den" or a bare nonnegative integer. Throws std::invalid_argument.
Rational parse_fraction(const std::string& s);

double to_double(const Rational& r);

}  // namespace omegalab
