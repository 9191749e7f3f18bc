#pragma once

// Chord-tangent group law on short Weierstrass curves y^2 = x^3 + A x + B
// over the rationals, in affine coordinates.

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dioph/rational.hpp"

namespace dioph {

class Curve {
 public:
  Curve(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (4 * pow(a_, 3) + 27 * pow(b_, 2) == 0) throw std::domain_error("singular curve");
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  /// Right-hand side x^3 + A x + B.
  Rational rhs(const Rational& x) const { return x * x * x + a_ * x + b_; }

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  Rational a_;
  Rational b_;
};

class CurvePoint {
 public:
  /// The point at infinity.
  CurvePoint() = default;
  CurvePoint(Rational x, Rational y) : affine_(Affine{std::move(x), std::move(y)}) {}

  static CurvePoint infinity() { return CurvePoint(); }

  bool is_infinity() const { return !affine_.has_value(); }

  const Rational& x() const {
    if (!affine_) throw std::logic_error("point at infinity has no coordinates");
    return affine_->x;
  }
  const Rational& y() const {
    if (!affine_) throw std::logic_error("point at infinity has no coordinates");
    return affine_->y;
  }

  /// "inf" or "(x, y)".
  std::string to_string() const {
    if (is_infinity()) return "inf";
    return "(" + affine_->x.to_string() + ", " + affine_->y.to_string() + ")";
  }

  /// Inverse of to_string; whitespace around the parts is optional.
  static CurvePoint parse(std::string_view text);

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

 private:
  struct Affine {
    Rational x;
    Rational y;
    friend bool operator==(const Affine&, const Affine&) = default;
  };
  std::optional<Affine> affine_;
};

/// y^2 = x^3 - 4.
inline const Curve& mordell_curve() {
  static const Curve curve(0, -4);
  return curve;
}

/// P = (2, 2), generator of the free part of the rational points of y^2 = x^3 - 4.
inline const CurvePoint& generator() {
  static const CurvePoint p(2, 2);
  return p;
}

inline bool is_on_curve(const Curve& c, const CurvePoint& pt) {
  if (pt.is_infinity()) return true;
  return pt.y() * pt.y() == c.rhs(pt.x());
}

inline CurvePoint negate(const CurvePoint& pt) {
  if (pt.is_infinity()) return pt;
  return CurvePoint(pt.x(), -pt.y());
}

namespace detail {

// Group law without the on-curve guard; callers have already checked.
inline CurvePoint add_unchecked(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;

  Rational slope;
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y().is_zero()) return CurvePoint::infinity();
    assert(!p.y().is_zero());
    slope = (3 * p.x() * p.x() + c.a()) / (2 * p.y());
  } else {
    slope = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = slope * slope - p.x() - q.x();
  Rational y3 = slope * (p.x() - x3) - p.y();
  return CurvePoint(std::move(x3), std::move(y3));
}

inline void require_on_curve(const Curve& c, const CurvePoint& pt) {
  if (!is_on_curve(c, pt)) throw std::invalid_argument("point off curve");
}

}  // namespace detail

inline CurvePoint add(const Curve& c, const CurvePoint& p, const CurvePoint& q) {
  detail::require_on_curve(c, p);
  detail::require_on_curve(c, q);
  return detail::add_unchecked(c, p, q);
}

/// n * p by left-to-right double-and-add. Negative n multiplies -p.
inline CurvePoint scalar_mul(const Curve& c, const Integer& n, const CurvePoint& p) {
  detail::require_on_curve(c, p);
  if (n == 0 || p.is_infinity()) return CurvePoint::infinity();

  const CurvePoint base = n < 0 ? negate(p) : p;
  const Integer m = abs(n);
  CurvePoint acc = CurvePoint::infinity();
  for (long bit = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    acc = detail::add_unchecked(c, acc, acc);
    if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      acc = detail::add_unchecked(c, acc, base);
    }
  }
  return acc;
}

inline CurvePoint scalar_mul(const Curve& c, long n, const CurvePoint& p) {
  return scalar_mul(c, Integer(n), p);
}

inline CurvePoint CurvePoint::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (body == "inf") return infinity();
  if (body.size() < 2 || body.front() != '(' || body.back() != ')') {
    throw std::invalid_argument("malformed point: '" + std::string(text) + "'");
  }
  body = body.substr(1, body.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos) {
    throw std::invalid_argument("malformed point: '" + std::string(text) + "'");
  }
  return CurvePoint(Rational::parse(body.substr(0, comma)), Rational::parse(body.substr(comma + 1)));
}

}  // namespace dioph
