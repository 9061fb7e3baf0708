#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "beurling/errors.hpp"
#include "beurling/io.hpp"
#include "cli.hpp"

namespace beurling::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "beurling");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Outcome o;
  const auto config = parse_args(static_cast<int>(argv.size()), argv.data(), out, err, o.code);
  if (config) o.code = run(*config, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

TEST(Grid, Parse) {
  const auto g = GridSpec::parse("1:10:10:lin");
  EXPECT_EQ(g.points, 10u);
  EXPECT_FALSE(g.geometric);
  EXPECT_EQ(g.values().back(), 10.0);
  EXPECT_TRUE(GridSpec::parse("1:1000:4:geo").geometric);
  EXPECT_THROW(GridSpec::parse("1:10:10"), DomainError);
  EXPECT_THROW(GridSpec::parse("0:10:10:geo"), DomainError);
  EXPECT_THROW(GridSpec::parse("1:10:x:lin"), DomainError);
  EXPECT_THROW(GridSpec::parse("10:1:3:lin"), DomainError);
}

TEST(Cli, CountTwoPrime) {
  const auto o = invoke({"count", "--system", "two-prime", "--grid", "1:10:10:lin", "--no-timestamp"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto lines = data_lines(o.out);
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines.front(), "x,N,pi,Pi,psi");
  EXPECT_EQ(lines[10].substr(0, 7), "10,7,2,");
  EXPECT_EQ(lines.back(), "verdict=ok");
  EXPECT_NE(o.out.find("# system=gallery:two-prime"), std::string::npos);
  EXPECT_EQ(o.out.find("# generated="), std::string::npos);
}

TEST(Cli, HeaderSwitches) {
  const auto with = invoke({"count", "--grid", "1:4:4:lin"});
  EXPECT_NE(with.out.find("# generated="), std::string::npos);
  const auto without = invoke({"count", "--grid", "1:4:4:lin", "--no-header"});
  EXPECT_EQ(without.out.find('#'), std::string::npos);
}

TEST(Cli, ZetaEuler) {
  const auto o = invoke({"zeta", "--mode", "euler", "--s-grid", "2@0", "--no-timestamp"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto lines = data_lines(o.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[1], "2,0,1.5,0");
}

TEST(Cli, ChebyshevVerdicts) {
  const auto tp = invoke({"chebyshev", "--system", "two-prime", "--grid", "10:1e5:20:geo"});
  ASSERT_EQ(tp.code, 0) << tp.err;
  EXPECT_NE(tp.out.find("verdict=ratio-collapsing"), std::string::npos);
  const auto cl = invoke({"chebyshev", "--system", "classical", "--grid", "1e3:1e5:20:geo"});
  ASSERT_EQ(cl.code, 0) << cl.err;
  EXPECT_NE(cl.out.find("verdict=consistent-with-Chebyshev"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({"count"}).code, 2);
  EXPECT_EQ(invoke({"count", "--grid", "1:10"}).code, 2);
  EXPECT_EQ(invoke({"count", "--system", "no-such", "--grid", "1:10:3:lin"}).code, 2);
  const auto beyond = invoke({"count", "--system", "classical", "--grid", "1:100:3:lin", "--x-max", "50"});
  EXPECT_EQ(beyond.code, 2);
  EXPECT_NE(beyond.err.find("error[domain]"), std::string::npos);
  const auto trunc = invoke({"probe-wi", "--system", "classical", "--grid", "5:7.5:6:lin", "--x-max", "3000"});
  EXPECT_EQ(trunc.code, 4);
  EXPECT_NE(trunc.err.find("needed x_max"), std::string::npos);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("--grid"), std::string::npos);
}

TEST(Cli, DeterministicWithoutTimestamp) {
  const std::vector<std::string> args{"decompose", "--system", "classical", "--grid", "3:3e4:80:geo",
                                      "--model", "", "--no-timestamp"};
  const auto model_path = std::filesystem::temp_directory_path() / "beurling_cli_model.json";
  {
    std::ofstream f(model_path);
    f << R"({"a": 1, "r": 0})";
  }
  auto with_model = args;
  with_model[6] = model_path.string();
  const auto first = invoke(with_model);
  const auto second = invoke(with_model);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(first.out.find("x,N,model,E,I_abs,R,f1,f2"), std::string::npos);
  std::filesystem::remove(model_path);
}

TEST(Cli, GenRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "beurling_cli_gen.json";
  const auto gen = invoke({"gen", "--system", "geometric-q", "--param", "q=1.75", "--out", path.string()});
  ASSERT_EQ(gen.code, 0) << gen.err;
  const auto loaded = load_system(path.string());
  ASSERT_EQ(loaded.size(), 1u);
  EXPECT_EQ(loaded.primes()[0], 1.75);
  const auto count = invoke({"count", "--system", path.string(), "--grid", "1:4:4:lin", "--no-header"});
  ASSERT_EQ(count.code, 0) << count.err;
  const auto lines = data_lines(count.out);
  // 1.75^2 = 3.0625 <= 4 < 1.75^3
  EXPECT_EQ(lines[4].substr(0, 4), "4,3,");
  std::filesystem::remove(path);
}

TEST(Cli, ProfileAndBoundary) {
  const auto prof = invoke({"profile", "--mode", "neg-exp2", "--grid", "0:10:41:lin"});
  ASSERT_EQ(prof.code, 0) << prof.err;
  EXPECT_NE(prof.out.find("verdict=unbounded-decrease"), std::string::npos);
  const auto pole = invoke({"probe-boundary", "--mode", "pole", "--sigma-ladder", "1.5,1.25,1.1",
                            "--h-grid", "0,1,2,3", "--system", "two-prime"});
  ASSERT_EQ(pole.code, 0) << pole.err;
  EXPECT_NE(pole.out.find("verdict=pseudomeasure-like"), std::string::npos);
}

}  // namespace
}  // namespace beurling::cli
