#pragma once

// The correspondence between a^3 + a^2 b + a b^2 + b^3 = 1 and y^2 = x^3 - 4:
//
//   a = (y + 2) / (2x),  b = -(y - 2) / (2x)
//   x = 2 / (a + b),     y = 2 (a - b) / (a + b)
//
// Mutually inverse away from the exceptional points (infinity, x = 0, a + b = 0).

#include <cassert>
#include <stdexcept>
#include <string>

#include "dioph/elliptic_curve.hpp"
#include "dioph/rational.hpp"

namespace dioph {

struct CubicPoint {
  Rational a;
  Rational b;

  std::string to_string() const { return "(" + a.to_string() + ", " + b.to_string() + ")"; }
  friend bool operator==(const CubicPoint&, const CubicPoint&) = default;
};

inline bool is_on_cubic(const CubicPoint& pt) {
  const Rational& a = pt.a;
  const Rational& b = pt.b;
  return a * a * a + a * a * b + a * b * b + b * b * b == 1;
}

inline CubicPoint to_cubic(const CurvePoint& pt) {
  if (pt.is_infinity() || pt.x().is_zero()) throw std::domain_error("exceptional point");
  detail::require_on_curve(mordell_curve(), pt);
  const Rational two_x = 2 * pt.x();
  CubicPoint out{(pt.y() + 2) / two_x, -(pt.y() - 2) / two_x};
  assert(is_on_cubic(out));
  return out;
}

inline CurvePoint to_curve(const CubicPoint& pt) {
  const Rational sum = pt.a + pt.b;
  if (sum.is_zero()) throw std::domain_error("exceptional point");
  if (!is_on_cubic(pt)) throw std::invalid_argument("point off cubic");
  CurvePoint out(2 / sum, 2 * (pt.a - pt.b) / sum);
  assert(is_on_curve(mordell_curve(), out));
  return out;
}

/// Both cubic coordinates positive <=> 2^(2/3) < x < 2. Expected to be true
/// for every point on the curve.
inline bool positivity_matches_window(const CurvePoint& pt) {
  const CubicPoint image = to_cubic(pt);
  const bool positive = image.a.sign() > 0 && image.b.sign() > 0;
  return positive == in_window(pt.x());
}

}  // namespace dioph
