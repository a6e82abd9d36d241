#include "galdist/quad.hpp"

#include "galdist/errors.hpp"

namespace galdist {

QuadField::QuadField(Rational d) : d_(std::move(d)) {
  if (d_ <= 0)
    throw InvalidArgument("field constant must be positive: " +
                          rational_to_string(d_));
  if (is_rational_square(d_))
    throw InvalidArgument("field constant must not be a square: " +
                          rational_to_string(d_));
}

QuadScalar QuadField::mul(const QuadScalar& x, const QuadScalar& y) const {
  // (a + bδ)(a' + b'δ) = (aa' + d·bb') + (ab' + a'b)δ
  return QuadScalar(x.a * y.a + d_ * x.b * y.b, x.a * y.b + x.b * y.a);
}

Rational QuadField::norm(const QuadScalar& x) const {
  return x.a * x.a - d_ * x.b * x.b;
}

QuadScalar QuadField::inv(const QuadScalar& x) const {
  if (x.is_zero()) throw DivisionByZero("inverse of zero");
  // N(x) ≠ 0 for x ≠ 0 because d is not a rational square.
  Rational n = norm(x);
  return QuadScalar(x.a / n, -x.b / n);
}

QuadScalar QuadField::div(const QuadScalar& x, const QuadScalar& y) const {
  return mul(x, inv(y));
}

std::string quad_to_string(const QuadScalar& x) {
  if (x.b == 0) return rational_to_string(x.a);
  std::string delta_part;
  if (x.b == 1) {
    delta_part = "δ";
  } else if (x.b == -1) {
    delta_part = "-δ";
  } else {
    delta_part = rational_to_string(x.b) + "δ";
  }
  if (x.a == 0) return delta_part;
  if (x.b > 0) return rational_to_string(x.a) + "+" + delta_part;
  return rational_to_string(x.a) + delta_part;
}

}  // namespace galdist
