#include "galdist/rational.hpp"

#include <cstddef>

#include "galdist/errors.hpp"

namespace galdist {

namespace {

Int int_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) throw ParseError("sign without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("invalid integer literal: " + text);
  }
  return Int(text);
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(int_from_string(text));
  if (text.find('/', slash + 1) != std::string::npos)
    throw ParseError("more than one '/' in rational literal: " + text);
  Int num = int_from_string(text.substr(0, slash));
  Int den = int_from_string(text.substr(slash + 1));
  if (den <= 0) throw ParseError("denominator must be positive: " + text);
  return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Int integer_part(const Rational& value) {
  if (!is_integer(value)) throw InvalidArgument("not an integer: " + rational_to_string(value));
  return numerator(value);
}

bool is_rational_square(const Rational& value) {
  if (value < 0) return false;
  // In lowest terms p/q is a square iff p and q both are.
  Int p = numerator(value), q = denominator(value);
  Int sp = sqrt(p), sq = sqrt(q);
  return sp * sp == p && sq * sq == q;
}

}  // namespace galdist
