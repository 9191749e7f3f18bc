#pragma once

// Radical identities and equal-sum geometric series built from solutions of
// a^k - b^k = a - b.
//
// With d = a - b = a^k - b^k:
//   root_k(b^k) + d = root_k(b^k + d)   and   root_k(a^k) - d = root_k(a^k - d).
// Both are certified by powering (a^k == b^k + d, b^k == a^k - d); no root is
// ever extracted.
//
// With a1 = 1/a and r = b/a the series sum a1 r^(n-1) and sum a1^k r^(k(n-1))
// share the sum 1/(a - b).

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

#include "dioph/rational.hpp"
#include "dioph/solvers.hpp"

namespace dioph {

struct CurioIdentity {
  int k = 2;
  Rational base_plus;   // b^k
  Rational base_minus;  // a^k
  Rational d;           // a - b
  Rational root_plus;   // b + d = a
  Rational root_minus;  // a - d = b

  /// Re-checks both identities by exact powering.
  bool holds() const {
    const auto e = static_cast<unsigned long>(k);
    return pow(root_plus, e) == base_plus + d && pow(root_minus, e) == base_minus - d &&
           d == root_plus - root_minus;
  }
};

struct GeometricSeriesPair {
  int k = 2;
  Rational first_term;  // 1/a
  Rational ratio;       // b/a
  Rational common_sum;

  /// a1 / (1 - r) == a1^k / (1 - r^k) == common_sum.
  bool holds() const {
    const auto e = static_cast<unsigned long>(k);
    return ratio.sign() > 0 && ratio < 1 && first_term / (1 - ratio) == common_sum &&
           pow(first_term, e) / (1 - pow(ratio, e)) == common_sum;
  }
};

inline CurioIdentity curio(const Solution& sol) {
  if (!sol.is_nontrivial()) throw std::invalid_argument("degenerate identity (d = 0 or bases 0/1)");
  if (sol.k < 2 || !verify_solution(sol.a, sol.b, sol.k).holds()) {
    throw std::invalid_argument("not a solution");
  }
  // An even root names the non-negative root, so both radicands' roots must be >= 0.
  if (sol.k % 2 == 0 && (sol.a.sign() < 0 || sol.b.sign() < 0)) {
    throw std::invalid_argument("even root of a negative base");
  }
  const auto e = static_cast<unsigned long>(sol.k);
  CurioIdentity id{sol.k, pow(sol.b, e), pow(sol.a, e), sol.a - sol.b, sol.a, sol.b};
  if (!id.holds()) throw std::logic_error("curio identity failed to certify");
  return id;
}

inline GeometricSeriesPair geometric_series(const Solution& sol) {
  if (!sol.is_nontrivial() || sol.b.sign() <= 0 || sol.b >= sol.a) {
    throw std::invalid_argument("non-convergent or degenerate series");
  }
  if (!verify_solution(sol.a, sol.b, sol.k).holds()) throw std::invalid_argument("not a solution");
  const Rational first = 1 / sol.a;
  const Rational ratio = sol.b / sol.a;
  GeometricSeriesPair s{sol.k, first, ratio, first / (1 - ratio)};
  if (!s.holds()) throw std::logic_error("series sums differ");
  return s;
}

/// a1 r^(n-1) for n >= 1.
inline Rational nth_term(const GeometricSeriesPair& s, unsigned long n) {
  if (n == 0) throw std::out_of_range("terms are numbered from 1");
  return s.first_term * pow(s.ratio, n - 1);
}

/// Sum of the first n terms.
inline Rational partial_sum(const GeometricSeriesPair& s, unsigned long n) {
  Rational total = 0;
  Rational term = s.first_term;
  for (unsigned long i = 0; i < n; ++i) {
    total = total + term;
    term = term * s.ratio;
  }
  return total;
}

enum class Format { plain, latex, json };

inline Format parse_format(std::string_view name) {
  if (name == "plain") return Format::plain;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

namespace detail {

inline std::string latex(const Rational& x) {
  if (x.is_integer()) return x.to_string();
  std::string sign = x.sign() < 0 ? "-" : "";
  return sign + "\\frac{" + Integer(abs(x.numerator())).get_str() + "}{" + x.denominator().get_str() + "}";
}

inline std::string latex_root(int k, const std::string& body) {
  if (k == 2) return "\\sqrt{" + body + "}";
  return "\\sqrt[" + std::to_string(k) + "]{" + body + "}";
}

inline std::string latex_paren(const Rational& x) {
  return x.is_integer() && x.sign() >= 0 ? latex(x) : "\\left(" + latex(x) + "\\right)";
}

inline std::string plain_paren(const Rational& x) {
  return x.is_integer() && x.sign() >= 0 ? x.to_string() : "(" + x.to_string() + ")";
}

}  // namespace detail

inline nlohmann::json to_json(const CurioIdentity& id) {
  return {{"k", id.k},
          {"base_plus", id.base_plus.to_string()},
          {"base_minus", id.base_minus.to_string()},
          {"d", id.d.to_string()},
          {"root_plus", id.root_plus.to_string()},
          {"root_minus", id.root_minus.to_string()}};
}

inline nlohmann::json to_json(const GeometricSeriesPair& s) {
  return {{"k", s.k},
          {"first_term", s.first_term.to_string()},
          {"ratio", s.ratio.to_string()},
          {"sum", s.common_sum.to_string()}};
}

/// Two lines, the "+" identity then the "-" identity.
inline std::string render(const CurioIdentity& id, Format format) {
  const std::string root = "root" + std::to_string(id.k);
  const std::string bp = id.base_plus.to_string();
  const std::string bm = id.base_minus.to_string();
  const std::string d = id.d.to_string();
  switch (format) {
    case Format::plain:
      return root + "(" + bp + ") + " + d + " = " + root + "(" + bp + " + " + d + ")\n" +
             root + "(" + bm + ") - " + d + " = " + root + "(" + bm + " - " + d + ")\n";
    case Format::latex: {
      using detail::latex;
      using detail::latex_root;
      const std::string lbp = latex(id.base_plus);
      const std::string lbm = latex(id.base_minus);
      const std::string ld = latex(id.d);
      return latex_root(id.k, lbp) + "+" + ld + "=" + latex_root(id.k, lbp + "+" + ld) + "\n" +
             latex_root(id.k, lbm) + "-" + ld + "=" + latex_root(id.k, lbm + "-" + ld) + "\n";
    }
    case Format::json:
      return to_json(id).dump(2) + "\n";
  }
  throw std::invalid_argument("unknown format");
}

inline std::string render(const GeometricSeriesPair& s, Format format) {
  const std::string k = std::to_string(s.k);
  switch (format) {
    case Format::plain: {
      using detail::plain_paren;
      const std::string a1 = plain_paren(s.first_term);
      const std::string r = plain_paren(s.ratio);
      return "sum_{n>=1} " + a1 + "*" + r + "^(n-1) = sum_{n>=1} " + a1 + "^" + k + "*" + r + "^(" +
             k + "(n-1)) = " + s.common_sum.to_string() + "\n";
    }
    case Format::latex: {
      using detail::latex_paren;
      const std::string a1 = latex_paren(s.first_term);
      const std::string r = latex_paren(s.ratio);
      return "\\sum_{n=1}^{\\infty}" + a1 + r + "^{n-1}=\\sum_{n=1}^{\\infty}" + a1 + "^{" + k + "}" +
             r + "^{" + k + "(n-1)}=" + detail::latex(s.common_sum) + "\n";
    }
    case Format::json:
      return to_json(s).dump(2) + "\n";
  }
  throw std::invalid_argument("unknown format");
}

}  // namespace dioph
