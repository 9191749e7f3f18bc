#pragma once

// Rational solutions of a^k - b^k = a - b.
//
//   k = 2: a + b = 1, the family (m, 1 - m).
//   k = 3: a^2 + ab + b^2 = 1, parametrized by integer pairs (m, n).
//   k = 4: positive solutions come from points of y^2 = x^3 - 4 with
//          2^(2/3) < x < 2. Starting from such a point P1 = n1 P the map
//          P1 -> +-(2 P1 - P) stays inside that window and |n| grows
//          strictly, so iterating it yields infinitely many distinct
//          solutions. Coordinate sizes roughly quadruple per step, so
//          expect multi-kilobyte integers past ten iterations.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/birational.hpp"
#include "dioph/elliptic_curve.hpp"
#include "dioph/rational.hpp"

namespace dioph {

enum class SolutionKind { trivial_fixed, trivial_unit, nontrivial };

inline std::string_view to_string(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::trivial_fixed: return "trivial-fixed";
    case SolutionKind::trivial_unit: return "trivial-unit";
    case SolutionKind::nontrivial: return "nontrivial";
  }
  return "unknown";
}

inline SolutionKind classify(const Rational& a, const Rational& b) {
  if (a == b) return SolutionKind::trivial_fixed;
  if ((a == 1 && b == 0) || (a == 0 && b == 1)) return SolutionKind::trivial_unit;
  return SolutionKind::nontrivial;
}

struct Solution {
  Rational a;
  Rational b;
  int k = 2;
  SolutionKind kind = SolutionKind::trivial_fixed;

  bool is_nontrivial() const { return kind == SolutionKind::nontrivial; }
  friend bool operator==(const Solution&, const Solution&) = default;
};

/// a^k - b^k - (a - b).
inline Rational residual(const Rational& a, const Rational& b, int k) {
  return pow(a, static_cast<unsigned long>(k)) - pow(b, static_cast<unsigned long>(k)) - (a - b);
}

/// Outcome of an exact check: the classified solution, or the nonzero residual.
struct Verification {
  std::optional<Solution> solution;
  Rational residual;

  bool holds() const { return solution.has_value(); }
};

inline Verification verify_solution(const Rational& a, const Rational& b, int k) {
  if (k < 2) throw std::out_of_range("exponent out of range");
  Rational r = residual(a, b, k);
  if (!r.is_zero()) return {std::nullopt, std::move(r)};
  return {Solution{a, b, k, classify(a, b)}, Rational(0)};
}

inline Solution solve_k2(const Rational& m) {
  Rational b = 1 - m;
  SolutionKind kind = classify(m, b);
  return Solution{m, std::move(b), 2, kind};
}

inline Solution solve_k3(const Integer& m, const Integer& n) {
  if (m == 0 && n == 0) throw std::invalid_argument("degenerate parameters");
  const Integer den = m * m + m * n + n * n;  // > 0 away from (0, 0)
  Rational a = Rational::normalize(m * m - n * n, den);
  Rational b = Rational::normalize(2 * m * n + n * n, den);
  SolutionKind kind = classify(a, b);
  return Solution{std::move(a), std::move(b), 3, kind};
}

inline Solution solve_k3(long m, long n) { return solve_k3(Integer(m), Integer(n)); }

namespace detail {

// x^4 - 8x^3 + 32x + 32, the denominator shared by the closed forms below.
// It has no rational roots.
inline Rational q_denominator(const Rational& x) {
  return (((x - 8) * x) * x + 32) * x + 32;
}

}  // namespace detail

/// Abscissa of 2 P1 - P for P1 = (x1, y1) on y^2 = x^3 - 4, in closed form.
inline Rational abscissa_of_q(const Rational& x1, const Rational& y1) {
  const Rational den = detail::q_denominator(x1);
  if (den.is_zero()) throw std::domain_error("singular input");
  const Rational& x = x1;
  const Rational x2 = x * x;
  const Rational x3 = x2 * x;
  const Rational x4 = x2 * x2;
  const Rational x5 = x4 * x;
  const Rational x6 = x3 * x3;
  const Rational x7 = x6 * x;
  const Rational x8 = x4 * x4;
  const Rational poly = x8 + 8 * x7 - 64 * x6 + 64 * x5 + 224 * x4 + 512 * x3 + 1024 * x2 -
                        1024 * x - 1024;
  const Rational y_coeff = 4 * x6 - 320 * x3 - 512;
  return 2 * (poly + y_coeff * y1) / (den * den);
}

/// 2 - x(2 P1 - P) written as 8{(-x^6 + 80x^3 + 128) y - 2(3x^4 - 16x^3 + 96x + 64)(x^3 - 4)}
/// over the squared denominator. Positive whenever 2^(2/3) < x1 < 2 and y1 > 0.
inline Rational upper_gap_of_q(const Rational& x1, const Rational& y1) {
  const Rational den = detail::q_denominator(x1);
  if (den.is_zero()) throw std::domain_error("singular input");
  const Rational& x = x1;
  const Rational x3 = x * x * x;
  const Rational x4 = x3 * x;
  const Rational left = (-(x3 * x3) + 80 * x3 + 128) * y1;
  const Rational right = 2 * (3 * x4 - 16 * x3 + 96 * x + 64) * (x3 - 4);
  return 8 * (left - right) / (den * den);
}

/// One step of the k = 4 point iteration: point == multiplier * P.
struct IterationState {
  CurvePoint point;
  Integer multiplier;
  std::size_t index = 1;
};

/// Checks every state invariant; throws std::invalid_argument naming the first failure.
/// `check_multiple` recomputes multiplier * P, which dominates the cost for deep states.
inline void validate_state(const IterationState& s, bool check_multiple = true) {
  const Curve& c = mordell_curve();
  if (s.point.is_infinity() || !is_on_curve(c, s.point)) {
    throw std::invalid_argument("start point off curve");
  }
  if (!in_window(s.point.x()) || s.point.y().sign() <= 0) {
    throw std::invalid_argument("start point out of window");
  }
  if (abs(s.multiplier) <= 2) throw std::invalid_argument("multiplier must exceed 2 in absolute value");
  if (check_multiple && scalar_mul(c, s.multiplier, generator()) != s.point) {
    throw std::invalid_argument("point is not multiplier * P");
  }
}

/// Searches n with 1 <= |n| <= max_abs and n * P == pt. Relies on the curve's
/// rational points being exactly the multiples of P.
inline std::optional<Integer> find_multiple(const CurvePoint& pt, long max_abs = 512) {
  const Curve& c = mordell_curve();
  if (!is_on_curve(c, pt)) throw std::invalid_argument("point off curve");
  if (pt.is_infinity()) return Integer(0);
  const CurvePoint& p = generator();
  CurvePoint acc = p;
  for (long n = 1; n <= max_abs; ++n) {
    if (acc.x() == pt.x()) return Integer(acc.y() == pt.y() ? n : -n);
    // Denominators of x(nP) grow like exp(c n^2); far past the target's size
    // no larger multiple can match.
    if (acc.x().denominator_digits() > 2 * pt.x().denominator_digits() + 8) break;
    acc = detail::add_unchecked(c, acc, p);
  }
  return std::nullopt;
}

inline IterationState initial_state(const CurvePoint& start, const Integer& multiplier) {
  IterationState s{start, multiplier, 1};
  validate_state(s);
  return s;
}

/// State for an arbitrary start point; the multiplier is recovered by search.
inline IterationState initial_state(const CurvePoint& start) {
  if (start.is_infinity() || !is_on_curve(mordell_curve(), start)) {
    throw std::invalid_argument("start point off curve");
  }
  if (!in_window(start.x()) || start.y().sign() <= 0) {
    throw std::invalid_argument("start point out of window");
  }
  auto n = find_multiple(start);
  if (!n) throw std::invalid_argument("start point is not a small multiple of P");
  return initial_state(start, *n);
}

/// A = -4P = (785/484, 5497/10648), the point of Fermat's solution.
inline const CurvePoint& fermat_point() {
  static const CurvePoint a(Rational::normalize(785, 484), Rational::normalize(5497, 10648));
  return a;
}

inline IterationState fermat_state() { return IterationState{fermat_point(), Integer(-4), 1}; }

inline IterationState next_state(const IterationState& s) {
  const Curve& c = mordell_curve();
  const CurvePoint doubled = detail::add_unchecked(c, s.point, s.point);
  const CurvePoint q = detail::add_unchecked(c, doubled, negate(generator()));
  const Integer n = 2 * s.multiplier - 1;
  // Q is never infinity or on the x-axis: 2 n - 1 is odd and nonzero, and the
  // curve has no rational 2-torsion.
  if (q.y().sign() > 0) return IterationState{q, n, s.index + 1};
  return IterationState{negate(q), Integer(-n), s.index + 1};
}

/// `count` consecutive iteration states starting at `start` (index 1).
inline std::vector<IterationState> iterate_states(std::size_t count, IterationState start) {
  std::vector<IterationState> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(std::move(start));
  while (out.size() < count) out.push_back(next_state(out.back()));
  return out;
}

inline Solution solution_of(const IterationState& s) {
  CubicPoint ab = to_cubic(s.point);
  SolutionKind kind = classify(ab.a, ab.b);
  return Solution{std::move(ab.a), std::move(ab.b), 4, kind};
}

inline std::vector<Solution> generate_k4(std::size_t count, const IterationState& start) {
  validate_state(start);
  std::vector<Solution> out;
  out.reserve(count);
  for (const auto& s : iterate_states(count, start)) out.push_back(solution_of(s));
  return out;
}

inline std::vector<Solution> generate_k4(std::size_t count, const CurvePoint& start) {
  return generate_k4(count, initial_state(start));
}

inline std::vector<Solution> generate_k4(std::size_t count) {
  return generate_k4(count, fermat_state());
}

}  // namespace dioph
