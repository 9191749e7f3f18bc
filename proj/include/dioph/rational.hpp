#pragma once

// Exact rational arithmetic on top of GMP.
//
// Every value is kept in canonical form: positive denominator, numerator and
// denominator coprime, zero stored as 0/1. Equality is therefore structural.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dioph {

using Integer = mpz_class;

/// Number of decimal digits of |n| (0 has one digit).
inline std::size_t decimal_digits(const Integer& n) {
  std::string s = Integer(abs(n)).get_str();
  return s.size();
}

class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(static_cast<long>(v)) {}  // NOLINT
  Rational(const Integer& v) : value_(v) {}  // NOLINT

  /// Build num/den in lowest terms. Throws std::domain_error on den == 0.
  static Rational normalize(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r;
    r.value_ = mpq_class(num, den);
    r.value_.canonicalize();
    return r;
  }

  /// Parse "num/den", "-num/den" or a whole number. Surrounding spaces are
  /// ignored. Throws std::invalid_argument on malformed text.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Canonical text: "num/den", or just "num" when the denominator is 1.
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  /// Digit counts of the numerator and denominator.
  std::size_t numerator_digits() const { return decimal_digits(value_.get_num()); }
  std::size_t denominator_digits() const { return decimal_digits(value_.get_den()); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.value_ + y.value_));
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.value_ - y.value_));
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(mpq_class(x.value_ * y.value_));
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw std::domain_error("division by zero");
    return Rational(mpq_class(x.value_ / y.value_));
  }
  friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(x.value_, y.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.to_string();
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;  // always canonical
};

/// Exact non-negative integer power; pow(x, 0) == 1 for every x, including 0.
inline Rational pow(const Rational& x, unsigned long k) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), k);
  // Powers of coprime integers stay coprime, but go through normalize anyway
  // so there is exactly one construction path for fractions.
  return Rational::normalize(num, den);
}

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

/// True iff 2^(2/3) < x < 2, i.e. x^3 > 4 and x < 2, by integer comparison.
inline bool in_window(const Rational& x) {
  const Integer p = x.numerator();
  const Integer q = x.denominator();  // q > 0
  const Integer p3 = p * p * p;
  const Integer q3 = q * q * q;
  return p3 > 4 * q3 && p < 2 * q;
}

inline Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> Integer {
    s = trim(s);
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
      }
    }
    return Integer(std::string(s), 10);
  };

  std::string_view body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(body, true));
  Integer num = parse_int(body.substr(0, slash), true);
  Integer den = parse_int(body.substr(slash + 1), false);
  return normalize(num, den);
}

}  // namespace dioph
