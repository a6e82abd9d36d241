#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace galdist {

// Exact scalars.  Rational is kept in canonical form by the backing type:
// lowest terms, positive denominator, zero as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q".  Throws ParseError on anything else, including
// a zero denominator.
Rational rational_from_string(const std::string& text);

// Inverse of rational_from_string: "p" when the value is integral, "p/q"
// otherwise.  The sign, if any, sits on the numerator.
std::string rational_to_string(const Rational& value);

bool is_integer(const Rational& value);

// Requires is_integer(value).
Int integer_part(const Rational& value);

// True when value equals the square of some rational.  Nonnegative input
// only; used to validate field constants.
bool is_rational_square(const Rational& value);

}  // namespace galdist
