#include "dioph/applications.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"

namespace {

using dioph::Format;
using dioph::Rational;
using dioph::Solution;

Rational q(long n, long d) { return Rational::normalize(n, d); }

Solution sol(const Rational& a, const Rational& b, int k) { return *dioph::verify_solution(a, b, k).solution; }

const Solution kHalves = sol(q(2, 3), q(1, 3), 2);
const Solution kDiophantus = sol(q(8, 13), q(7, 13), 3);
const Solution kFermat = sol(q(26793, 34540), q(15799, 34540), 4);

TEST(Curio, SquareRoots) {
  const auto id = dioph::curio(kHalves);
  EXPECT_EQ(id.base_plus, q(1, 9));
  EXPECT_EQ(id.d, q(1, 3));
  EXPECT_EQ(id.base_minus, q(4, 9));
  // Certified as (b + d)^2 = b^2 + d and (a - d)^2 = a^2 - d.
  EXPECT_EQ(pow(q(1, 3) + q(1, 3), 2), q(1, 9) + q(1, 3));
  EXPECT_EQ(pow(q(2, 3) - q(1, 3), 2), q(4, 9) - q(1, 3));
  EXPECT_TRUE(id.holds());
}

TEST(Curio, CubeRoots) {
  const auto id = dioph::curio(kDiophantus);
  EXPECT_EQ(id.base_plus, q(343, 2197));
  EXPECT_EQ(id.base_minus, q(512, 2197));
  EXPECT_EQ(id.d, q(1, 13));
  EXPECT_EQ(id.root_plus, q(8, 13));
  EXPECT_EQ(id.root_minus, q(7, 13));
  EXPECT_TRUE(id.holds());
}

TEST(Curio, FourthRoots) {
  const auto id = dioph::curio(kFermat);
  EXPECT_EQ(id.base_plus.to_string(), "62304353849776801/1423276677734560000");
  EXPECT_EQ(id.d.to_string(), "5497/17270");
  EXPECT_TRUE(id.holds());
}

TEST(Curio, RejectsTrivialAndNonSolutions) {
  try {
    (void)dioph::curio(sol(q(5, 7), q(5, 7), 4));
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "degenerate identity (d = 0 or bases 0/1)");
  }
  EXPECT_THROW((void)dioph::curio(sol(1, 0, 3)), std::invalid_argument);
  Solution fake{q(1, 2), q(1, 3), 3, dioph::SolutionKind::nontrivial};
  EXPECT_THROW((void)dioph::curio(fake), std::invalid_argument);
  // k = 2, m = 3/2: (3/2, -1/2) needs an even root of a negative number.
  EXPECT_THROW((void)dioph::curio(dioph::solve_k2(q(3, 2))), std::invalid_argument);
  // Odd k tolerates negative roots: (-1, 1) for k = 3.
  EXPECT_TRUE(dioph::curio(dioph::solve_k3(0, 1)).holds());
}

TEST(Curio, EverySolverOutputCertifies) {
  for (long m = -6; m <= 6; ++m)
    for (long n = -6; n <= 6; ++n) {
      if (m == 0 && n == 0) continue;
      const auto s = dioph::solve_k3(m, n);
      if (s.is_nontrivial()) EXPECT_TRUE(dioph::curio(s).holds()) << m << " " << n;
    }
  for (const auto& s : dioph::generate_k4(3)) EXPECT_TRUE(dioph::curio(s).holds());
  for (long n = 1; n < 20; ++n) {
    const auto s = dioph::solve_k2(q(n, 20));
    if (s.is_nontrivial()) EXPECT_TRUE(dioph::curio(s).holds()) << n;
  }
}

TEST(Series, DiophantusAndFermat) {
  const auto d = dioph::geometric_series(kDiophantus);
  EXPECT_EQ(d.first_term, q(13, 8));
  EXPECT_EQ(d.ratio, q(7, 8));
  EXPECT_EQ(d.common_sum, 13);

  const auto f = dioph::geometric_series(kFermat);
  EXPECT_EQ(f.first_term, q(34540, 26793));
  EXPECT_EQ(f.ratio, q(15799, 26793));
  EXPECT_EQ(f.common_sum, q(17270, 5497));
}

TEST(Series, SquareCase) {
  // (3/2)/(1/2) = 3 and (9/4)/(3/4) = 3.
  const auto s = dioph::geometric_series(kHalves);
  EXPECT_EQ(s.first_term, q(3, 2));
  EXPECT_EQ(s.ratio, q(1, 2));
  EXPECT_EQ(s.common_sum, 3);
  EXPECT_EQ(q(3, 2) / q(1, 2), 3);
  EXPECT_EQ(q(9, 4) / q(3, 4), 3);
}

TEST(Series, RejectsBadOrder) {
  try {
    (void)dioph::geometric_series(sol(q(1, 3), q(2, 3), 2));
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "non-convergent or degenerate series");
  }
  EXPECT_THROW((void)dioph::geometric_series(dioph::solve_k2(q(3, 2))), std::invalid_argument);
  EXPECT_THROW((void)dioph::geometric_series(sol(1, 0, 4)), std::invalid_argument);
}

TEST(Series, NthTerm) {
  const auto f = dioph::geometric_series(kFermat);
  EXPECT_EQ(nth_term(f, 1), q(34540, 26793));
  EXPECT_EQ(nth_term(f, 2), Rational::normalize(34540L * 15799L, 26793L * 26793L));
  EXPECT_EQ(nth_term(f, 1), f.first_term);
  EXPECT_THROW((void)nth_term(f, 0), std::out_of_range);
}

TEST(Series, PartialSumsAndRemainder) {
  for (const auto& s : {kHalves, kDiophantus, kFermat}) {
    const auto g = dioph::geometric_series(s);
    Rational prev = 0;
    Rational powered = 0;
    const auto k = static_cast<unsigned long>(g.k);
    for (unsigned long n = 1; n <= 50; ++n) {
      const Rational partial = partial_sum(g, n);
      EXPECT_GT(partial, prev);
      EXPECT_LT(partial, g.common_sum);
      EXPECT_EQ(g.common_sum - partial, g.first_term * pow(g.ratio, n) / (1 - g.ratio));
      powered = powered + pow(nth_term(g, n), k);
      EXPECT_LT(powered, g.common_sum);
      prev = partial;
    }
  }
}

TEST(Render, FermatPlainLine) {
  const std::string text = render(dioph::curio(kFermat), Format::plain);
  const std::string first = text.substr(0, text.find('\n'));
  EXPECT_EQ(first,
            "root4(62304353849776801/1423276677734560000) + 5497/17270 = "
            "root4(62304353849776801/1423276677734560000 + 5497/17270)");
  EXPECT_NE(text.find(") - 5497/17270 = root4("), std::string::npos);
}

TEST(Render, Latex) {
  const std::string text = render(dioph::curio(kFermat), Format::latex);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "\\sqrt[4]{\\frac{62304353849776801}{1423276677734560000}}+\\frac{5497}{17270}="
            "\\sqrt[4]{\\frac{62304353849776801}{1423276677734560000}+\\frac{5497}{17270}}");
  const std::string sq = render(dioph::curio(kHalves), Format::latex);
  EXPECT_EQ(sq.substr(0, sq.find('\n')), "\\sqrt{\\frac{1}{9}}+\\frac{1}{3}=\\sqrt{\\frac{1}{9}+\\frac{1}{3}}");
  const std::string series = render(dioph::geometric_series(kDiophantus), Format::latex);
  EXPECT_NE(series.find("=13\n"), std::string::npos);
}

TEST(Render, SeriesJson) {
  const auto j = nlohmann::json::parse(render(dioph::geometric_series(kDiophantus), Format::json));
  EXPECT_EQ(j["first_term"], "13/8");
  EXPECT_EQ(j["ratio"], "7/8");
  EXPECT_EQ(j["sum"], "13");
  EXPECT_EQ(j["k"], 3);
}

TEST(Render, CurioJsonRoundTrips) {
  const auto id = dioph::curio(kFermat);
  const auto j = nlohmann::json::parse(render(id, Format::json));
  EXPECT_EQ(Rational::parse(j["base_plus"].get<std::string>()), id.base_plus);
  EXPECT_EQ(Rational::parse(j["base_minus"].get<std::string>()), id.base_minus);
  EXPECT_EQ(Rational::parse(j["d"].get<std::string>()), id.d);
  EXPECT_EQ(Rational::parse(j["root_plus"].get<std::string>()), id.root_plus);
  EXPECT_EQ(Rational::parse(j["root_minus"].get<std::string>()), id.root_minus);
}

TEST(Render, SeriesPlain) {
  EXPECT_EQ(render(dioph::geometric_series(kDiophantus), Format::plain),
            "sum_{n>=1} (13/8)*(7/8)^(n-1) = sum_{n>=1} (13/8)^3*(7/8)^(3(n-1)) = 13\n");
}

TEST(Render, UnknownFormat) {
  EXPECT_THROW((void)dioph::parse_format("html"), std::invalid_argument);
  EXPECT_EQ(dioph::parse_format("latex"), Format::latex);
}

}  // namespace
