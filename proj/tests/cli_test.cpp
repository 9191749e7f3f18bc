#include "dioph/cli.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "dioph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dioph::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, VerifyFermat) {
  const auto r = run({"verify", "--a", "26793/34540", "--b", "15799/34540", "--k", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds: nontrivial"), std::string::npos);
  EXPECT_NE(r.out.find("d=5497/17270"), std::string::npos);
  EXPECT_NE(r.out.find("b^k=62304353849776801/1423276677734560000"), std::string::npos);
}

TEST(Cli, VerifyRejects) {
  const auto r = run({"verify", "--a", "1/2", "--b", "1/3", "--k", "3"});
  EXPECT_EQ(r.code, 1);
  // 1/8 - 1/27 - 1/6 = -17/216.
  EXPECT_NE(r.out.find("fails: residual=-17/216"), std::string::npos);
}

TEST(Cli, VerifyJson) {
  const auto r = run({"verify", "--a", "8/13", "--b", "7/13", "--k", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_EQ(j["kind"], "nontrivial");
  EXPECT_EQ(j["d"], "1/13");
}

TEST(Cli, SeriesJson) {
  const auto r = run({"series", "--a", "8/13", "--b", "7/13", "--k", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["sum"], "13");
  EXPECT_EQ(j["first_term"], "13/8");
}

TEST(Cli, SeriesTerms) {
  const auto r = run({"series", "--a", "26793/34540", "--b", "15799/34540", "--k", "4", "--terms", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("= 17270/5497"), std::string::npos);
  EXPECT_NE(r.out.find("a_1=34540/26793"), std::string::npos);
  EXPECT_NE(r.out.find("a_2=" + dioph::Rational::normalize(34540L * 15799L, 26793L * 26793L).to_string()),
            std::string::npos);
}

TEST(Cli, SeriesWrongOrderFails) {
  const auto r = run({"series", "--a", "1/3", "--b", "2/3", "--k", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("non-convergent"), std::string::npos);
}

TEST(Cli, Curio) {
  const auto r = run({"curio", "--a", "26793/34540", "--b", "15799/34540", "--k", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "root4(62304353849776801/1423276677734560000) + 5497/17270 = "
            "root4(62304353849776801/1423276677734560000 + 5497/17270)");
  const auto latex = run({"curio", "--a", "2/3", "--b", "1/3", "--k", "2", "--format", "latex"});
  EXPECT_EQ(latex.code, 0);
  EXPECT_NE(latex.out.find("\\sqrt{\\frac{4}{9}}-\\frac{1}{3}"), std::string::npos);
  EXPECT_EQ(run({"curio", "--a", "1/2", "--b", "1/2", "--k", "2"}).code, 1);
  EXPECT_EQ(run({"curio", "--a", "1/2", "--b", "1/3", "--k", "2"}).code, 1);
}

TEST(Cli, Solve) {
  EXPECT_EQ(run({"solve", "--k", "3", "--m", "3", "--n", "1"}).out, "k=3 a=8/13 b=7/13 nontrivial\n");
  EXPECT_EQ(run({"solve", "--k", "2", "--m", "1/2"}).out, "k=2 a=1/2 b=1/2 trivial-fixed\n");
  EXPECT_EQ(run({"solve", "--k", "2"}).out, "k=2 a=2/3 b=1/3 nontrivial\n");
  EXPECT_EQ(run({"solve", "--k", "3", "--m", "0", "--n", "0"}).code, 1);
  EXPECT_EQ(run({"solve", "--k", "3", "--m", "1/2"}).code, 2);
  EXPECT_EQ(run({"solve", "--k", "4"}).code, 2);
}

TEST(Cli, Generate) {
  const auto r = run({"generate", "--k", "4", "--count", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["a"], "26793/34540");
  EXPECT_EQ(j[0]["multiplier"], "-4");
  EXPECT_EQ(j[1]["x"], "8152570498330546/4944742493612769");
  EXPECT_EQ(j[1]["b"], "113516496202066695693956/286639743984973696444599");

  const auto from = run({"generate", "--k", "4", "--count", "1", "--start",
                         "(8152570498330546/4944742493612769, "
                         "241351355149002573947470/347708669978634678361647)"});
  ASSERT_EQ(from.code, 0);
  EXPECT_NE(from.out.find("a=234192173776567982667691/286639743984973696444599"), std::string::npos);

  EXPECT_EQ(run({"generate", "--k", "4", "--count", "1", "--start", "(5, 11)"}).code, 1);
  EXPECT_EQ(run({"generate", "--k", "4", "--count", "1", "--start", "(5 11)"}).code, 2);
  EXPECT_EQ(run({"generate", "--k", "3", "--count", "1"}).code, 2);
}

TEST(Cli, Search) {
  const auto r = run({"search", "--k", "3", "--max-den", "13", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["solutions"].size(), 2u);
  EXPECT_EQ(run({"search", "--k", "5", "--max-den", "30", "--expect-found"}).code, 1);
  EXPECT_EQ(run({"search", "--k", "5", "--max-den", "30"}).code, 0);
  const auto par = run({"search", "--k", "3", "--max-den", "60", "--jobs", "3"});
  const auto seq = run({"search", "--k", "3", "--max-den", "60"});
  EXPECT_EQ(par.out, seq.out);
}

TEST(Cli, Point) {
  EXPECT_EQ(run({"point", "--op", "add", "--p", "(2,2)", "--q", "(2,2)"}).out, "(5, -11)\n");
  EXPECT_EQ(run({"point", "--op", "neg", "--p", "(2,2)"}).out, "(2, -2)\n");
  EXPECT_EQ(run({"point", "--op", "mul", "--n", "-4", "--p", "(2,2)"}).out, "(785/484, 5497/10648)\n");
  EXPECT_EQ(run({"point", "--op", "mul", "--n", "0", "--p", "(2,2)"}).out, "inf\n");
  EXPECT_EQ(run({"point", "--op", "add", "--p", "(1,1)", "--q", "(2,2)"}).code, 1);
  EXPECT_EQ(run({"point", "--op", "add", "--p", "(2,2)"}).code, 2);
  EXPECT_EQ(run({"point", "--op", "div", "--p", "(2,2)"}).code, 2);
}

TEST(Cli, Properties) {
  const auto a = run({"properties", "--seed", "7", "--samples", "20"});
  const auto b = run({"properties", "--seed", "7", "--samples", "20"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("failures=0"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--a", "1/x", "--b", "1/3", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--a", "1/0", "--b", "1/3", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "--a", "1/2", "--b", "1/3"}).code, 2);
  EXPECT_EQ(run({"verify", "--a", "1/2", "--b", "1/3", "--k", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--a", "1/2", "--b", "1/2", "--k", "2", "--format", "html"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JsonRationalsRoundTrip) {
  const auto r = run({"curio", "--a", "8/13", "--b", "7/13", "--k", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"base_plus", "base_minus", "d", "root_plus", "root_minus"}) {
    const std::string text = j[key].get<std::string>();
    EXPECT_EQ(dioph::Rational::parse(text).to_string(), text);
  }
}

}  // namespace
