#pragma once

#include <string>

#include "galdist/rational.hpp"

namespace galdist {

// Element a + b·δ of the quadratic extension F(δ), written over the exact
// rationals.  The value of δ² is not stored here; every operation that needs
// it takes a QuadField.  Addition, negation and conjugation are independent
// of δ² and live on the scalar itself.
struct QuadScalar {
  Rational a;  // rational part
  Rational b;  // coefficient of δ

  QuadScalar() = default;
  QuadScalar(Rational a_part, Rational b_part = Rational(0))
      : a(std::move(a_part)), b(std::move(b_part)) {}
  QuadScalar(int a_part) : a(a_part), b(0) {}

  static QuadScalar delta() { return QuadScalar(Rational(0), Rational(1)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  // Galois conjugate a - b·δ.
  QuadScalar conj() const { return QuadScalar(a, -b); }

  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
    return QuadScalar(x.a + y.a, x.b + y.b);
  }
  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
    return QuadScalar(x.a - y.a, x.b - y.b);
  }
  friend QuadScalar operator-(const QuadScalar& x) {
    return QuadScalar(-x.a, -x.b);
  }
  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) {
    return !(x == y);
  }
};

// The field F(δ) with δ² = d fixed for the whole session.  d must be a
// positive non-square rational, so that the extension is a genuine quadratic
// field and every nonzero element is invertible.
class QuadField {
 public:
  explicit QuadField(Rational d = Rational(2));

  const Rational& d() const { return d_; }

  QuadScalar mul(const QuadScalar& x, const QuadScalar& y) const;

  // Field norm a² - d·b²; zero only at zero because d is not a square.
  Rational norm(const QuadScalar& x) const;

  // Throws DivisionByZero at zero.
  QuadScalar inv(const QuadScalar& x) const;
  QuadScalar div(const QuadScalar& x, const QuadScalar& y) const;

 private:
  Rational d_;
};

// "a", "bδ" or "a+bδ" with exact rational coefficients.
std::string quad_to_string(const QuadScalar& x);

}  // namespace galdist
