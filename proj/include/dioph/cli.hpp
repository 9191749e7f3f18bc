#pragma once

// Command-line front end. `run` is the whole program minus process plumbing so
// tests can drive it with an argv and capture its output.
//
// Exit codes: 0 success, 1 verification failed (or a well-formed request the
// mathematics rejects), 2 usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dioph/applications.hpp"
#include "dioph/birational.hpp"
#include "dioph/elliptic_curve.hpp"
#include "dioph/rational.hpp"
#include "dioph/search.hpp"
#include "dioph/solvers.hpp"

namespace dioph::cli {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Rational rational_arg(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline CurvePoint point_arg(const std::string& flag, const std::string& text) {
  try {
    return CurvePoint::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline Integer integer_arg(const std::string& flag, const std::string& text) {
  const Rational r = rational_arg(flag, text);
  if (!r.is_integer()) throw UsageError(flag + ": expected an integer, got '" + text + "'");
  return r.numerator();
}

inline std::string latex(const Rational& x) { return dioph::detail::latex(x); }

inline nlohmann::json solution_json(const Solution& s) {
  return {{"k", s.k}, {"a", s.a.to_string()}, {"b", s.b.to_string()}, {"kind", to_string(s.kind)}};
}

inline void print_solution(std::ostream& out, const Solution& s, Format format) {
  switch (format) {
    case Format::plain:
      out << "k=" << s.k << " a=" << s.a << " b=" << s.b << " " << to_string(s.kind) << "\n";
      break;
    case Format::latex:
      out << "a=" << latex(s.a) << ",\\quad b=" << latex(s.b) << "\n";
      break;
    case Format::json:
      out << solution_json(s).dump(2) << "\n";
      break;
  }
}

inline int cmd_solve(std::ostream& out, Format format, int k, const std::string& m, const std::string& n) {
  Solution s;
  if (k == 2) {
    s = solve_k2(rational_arg("--m", m.empty() ? "2/3" : m));
  } else if (k == 3) {
    s = solve_k3(integer_arg("--m", m.empty() ? "3" : m), integer_arg("--n", n.empty() ? "1" : n));
  } else {
    throw UsageError("--k: solve supports k = 2 or 3 (use generate for k = 4)");
  }
  print_solution(out, s, format);
  return 0;
}

inline int cmd_generate(std::ostream& out, Format format, int k, std::size_t count,
                        const std::string& start) {
  if (k != 4) throw UsageError("--k: generate supports k = 4 only");
  const IterationState first =
      start.empty() ? fermat_state() : initial_state(point_arg("--start", start));
  validate_state(first);
  const auto states = iterate_states(count, first);

  nlohmann::json arr = nlohmann::json::array();
  for (const auto& st : states) {
    const Solution s = solution_of(st);
    switch (format) {
      case Format::plain:
        out << "P" << st.index << " n=" << st.multiplier.get_str() << " x=" << st.point.x()
            << " y=" << st.point.y() << "\n"
            << "  a=" << s.a << " b=" << s.b << "\n";
        break;
      case Format::latex:
        out << "a_{" << st.index << "}=" << latex(s.a) << ",\\quad b_{" << st.index << "}=" << latex(s.b)
            << "\n";
        break;
      case Format::json:
        arr.push_back({{"index", st.index},
                       {"multiplier", st.multiplier.get_str()},
                       {"x", st.point.x().to_string()},
                       {"y", st.point.y().to_string()},
                       {"a", s.a.to_string()},
                       {"b", s.b.to_string()}});
        break;
    }
  }
  if (format == Format::json) out << arr.dump(2) << "\n";
  return 0;
}

inline int cmd_verify(std::ostream& out, Format format, const Rational& a, const Rational& b, int k) {
  const Verification v = verify_solution(a, b, k);
  const auto e = static_cast<unsigned long>(k);
  if (format == Format::json) {
    nlohmann::json j = {{"holds", v.holds()}, {"k", k}, {"a", a.to_string()}, {"b", b.to_string()}};
    if (v.holds()) {
      j["kind"] = to_string(v.solution->kind);
      j["d"] = (a - b).to_string();
      j["a_pow_k"] = pow(a, e).to_string();
      j["b_pow_k"] = pow(b, e).to_string();
    } else {
      j["residual"] = v.residual.to_string();
    }
    out << j.dump(2) << "\n";
  } else if (v.holds()) {
    out << "holds: " << to_string(v.solution->kind) << "\n"
        << "k=" << k << "\n"
        << "a=" << a << "\n"
        << "b=" << b << "\n"
        << "d=" << (a - b) << "\n"
        << "a^k=" << pow(a, e) << "\n"
        << "b^k=" << pow(b, e) << "\n";
  } else {
    out << "fails: residual=" << v.residual << "\n";
  }
  return v.holds() ? 0 : 1;
}

inline int cmd_curio(std::ostream& out, std::ostream& err, Format format, const Rational& a,
                     const Rational& b, int k) {
  const Verification v = verify_solution(a, b, k);
  if (!v.holds()) {
    err << "not a solution: residual=" << v.residual << "\n";
    return 1;
  }
  out << render(curio(*v.solution), format);
  return 0;
}

inline int cmd_series(std::ostream& out, std::ostream& err, Format format, const Rational& a,
                      const Rational& b, int k, unsigned long terms) {
  const Verification v = verify_solution(a, b, k);
  if (!v.holds()) {
    err << "not a solution: residual=" << v.residual << "\n";
    return 1;
  }
  const GeometricSeriesPair s = geometric_series(*v.solution);
  if (format == Format::json) {
    nlohmann::json j = to_json(s);
    if (terms > 0) {
      nlohmann::json list = nlohmann::json::array();
      for (unsigned long n = 1; n <= terms; ++n) list.push_back(nth_term(s, n).to_string());
      j["terms"] = list;
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << render(s, format);
  for (unsigned long n = 1; n <= terms; ++n) out << "a_" << n << "=" << nth_term(s, n) << "\n";
  return 0;
}

inline int cmd_search(std::ostream& out, Format format, int k, std::uint64_t max_den,
                      const SearchOptions& opt, bool expect_found) {
  const SearchReport rep = search_k(k, max_den, opt);
  if (format == Format::json) {
    out << to_json(rep).dump(2) << "\n";
  } else {
    out << "k=" << rep.k << " max_den=" << rep.max_den << " pairs_examined=" << rep.pairs_examined
        << " solutions=" << rep.solutions.size() << "\n";
    for (const auto& s : rep.solutions) out << s.a << " " << s.b << "\n";
  }
  return expect_found && rep.solutions.empty() ? 1 : 0;
}

inline int cmd_point(std::ostream& out, Format format, const std::string& op, const std::string& p_text,
                     const std::string& q_text, const std::string& n_text) {
  const Curve& c = mordell_curve();
  if (p_text.empty()) throw UsageError("--p is required");
  const CurvePoint p = point_arg("--p", p_text);
  CurvePoint result;
  if (op == "add") {
    if (q_text.empty()) throw UsageError("--q is required for add");
    result = add(c, p, point_arg("--q", q_text));
  } else if (op == "neg") {
    dioph::detail::require_on_curve(c, p);
    result = negate(p);
  } else if (op == "mul") {
    if (n_text.empty()) throw UsageError("--n is required for mul");
    result = scalar_mul(c, integer_arg("--n", n_text), p);
  } else {
    throw UsageError("--op must be add, neg or mul");
  }
  if (format == Format::json) {
    out << nlohmann::json({{"point", result.to_string()}}).dump(2) << "\n";
  } else {
    out << result.to_string() << "\n";
  }
  return 0;
}

// Randomized spot checks of the group law, the correspondence and the k = 3
// family; deterministic for a given seed.
inline int cmd_properties(std::ostream& out, std::uint64_t seed, unsigned samples) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> mult(-8, 8);
  std::uniform_int_distribution<long> param(-1000, 1000);
  const Curve& c = mordell_curve();
  unsigned failures = 0;
  for (unsigned i = 0; i < samples; ++i) {
    const CurvePoint p = scalar_mul(c, mult(rng), generator());
    const CurvePoint q = scalar_mul(c, mult(rng), generator());
    const CurvePoint r = scalar_mul(c, mult(rng), generator());
    const CurvePoint pq = add(c, p, q);
    if (!is_on_curve(c, pq)) ++failures;
    if (pq != add(c, q, p)) ++failures;
    if (add(c, pq, r) != add(c, p, add(c, q, r))) ++failures;
    if (!add(c, p, negate(p)).is_infinity()) ++failures;
    if (!pq.is_infinity() && !pq.x().is_zero()) {
      if (to_curve(to_cubic(pq)) != pq || !positivity_matches_window(pq)) ++failures;
    }
    long m = param(rng);
    long n = param(rng);
    if (m == 0 && n == 0) m = 1;
    const Solution s = solve_k3(m, n);
    if (s.a * s.a + s.a * s.b + s.b * s.b != 1 || !verify_solution(s.a, s.b, 3).holds()) ++failures;
  }
  out << "seed=" << seed << " samples=" << samples << " failures=" << failures << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational solutions of a^k - b^k = a - b", "dioph"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_name = "plain";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "json"}));

  int k = 0;
  std::string m_text, n_text, a_text, b_text, start_text, p_text, q_text, op;
  std::size_t count = 1;
  unsigned long terms = 0;
  std::uint64_t max_den = 200;
  std::uint64_t seed = 0;
  unsigned samples = 100;
  bool expect_found = false;
  SearchOptions search_opt;

  auto* solve = app.add_subcommand("solve", "Closed-form solution for k = 2 or 3");
  solve->add_option("--k", k)->required()->check(CLI::IsMember({2, 3}));
  solve->add_option("--m", m_text, "k=2: rational m; k=3: integer m");
  solve->add_option("--n", n_text, "k=3: integer n");

  auto* generate = app.add_subcommand("generate", "Positive k = 4 solutions by point iteration");
  generate->add_option("--k", k)->required()->check(CLI::IsMember({4}));
  generate->add_option("--count", count)->required()->check(CLI::PositiveNumber);
  generate->add_option("--start", start_text, "Start point \"(x, y)\" (default (785/484, 5497/10648))");

  auto* verify = app.add_subcommand("verify", "Exact check of a^k - b^k = a - b");
  auto* curio_cmd = app.add_subcommand("curio", "Radical identities from a solution");
  auto* series = app.add_subcommand("series", "Equal-sum geometric series from a solution");
  for (auto* sub : {verify, curio_cmd, series}) {
    sub->add_option("--a", a_text)->required();
    sub->add_option("--b", b_text)->required();
    sub->add_option("--k", k)->required()->check(CLI::Range(2, 1 << 20));
  }
  series->add_option("--terms", terms, "Also print the first N terms");

  auto* search = app.add_subcommand("search", "Exhaustive bounded-denominator search");
  search->add_option("--k", k)->required()->check(CLI::Range(2, 64));
  search->add_option("--max-den", max_den)->required()->check(CLI::PositiveNumber);
  search->add_option("--jobs", search_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--expect-found", expect_found, "Exit 1 if nothing is found");
  search->add_flag("--negative", search_opt.include_negative, "Include sign-mixed and negative pairs");
  search->add_option("--height", search_opt.height, "With --negative: |numerators| <= height * q")
      ->check(CLI::PositiveNumber);

  auto* point = app.add_subcommand("point", "Group law on y^2 = x^3 - 4");
  point->add_option("--op", op)->required()->check(CLI::IsMember({"add", "neg", "mul"}));
  point->add_option("--p", p_text)->required();
  point->add_option("--q", q_text);
  point->add_option("--n", n_text);

  auto* props = app.add_subcommand("properties", "Randomized invariant checks");
  props->add_option("--seed", seed)->required();
  props->add_option("--samples", samples)->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    const Format format = parse_format(format_name);
    if (solve->parsed()) return detail::cmd_solve(out, format, k, m_text, n_text);
    if (generate->parsed()) return detail::cmd_generate(out, format, k, count, start_text);
    if (search->parsed()) return detail::cmd_search(out, format, k, max_den, search_opt, expect_found);
    if (point->parsed()) return detail::cmd_point(out, format, op, p_text, q_text, n_text);
    if (props->parsed()) return detail::cmd_properties(out, seed, samples);

    const Rational a = detail::rational_arg("--a", a_text);
    const Rational b = detail::rational_arg("--b", b_text);
    if (verify->parsed()) return detail::cmd_verify(out, format, a, b, k);
    if (curio_cmd->parsed()) return detail::cmd_curio(out, err, format, a, b, k);
    if (series->parsed()) return detail::cmd_series(out, err, format, a, b, k, terms);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace dioph::cli
