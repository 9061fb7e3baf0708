#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "beurling/asymptotics.hpp"
#include "beurling/errors.hpp"
#include "beurling/numerics.hpp"

namespace beurling {
namespace {

constexpr double kE = std::numbers::e;

std::vector<double> decade_grid(double lo, double decades, int per_decade) {
  return numerics::geomspace(lo, lo * std::pow(10.0, decades), static_cast<std::size_t>(decades * per_decade) + 1);
}

TEST(ModelEval, Examples) {
  DecompositionModel plain;
  EXPECT_DOUBLE_EQ(model_eval(plain, 100.0), 100.0);

  DecompositionModel osc;
  osc.r = 1.0;
  osc.main_osc = {{0.5, 1.0}};
  EXPECT_NEAR(model_eval(osc, std::exp(2.0)), 11.7031798772219416, 1e-12);

  DecompositionModel block;
  block.r = 1.0;
  block.blocks = {LowerBlock{0.0, {PolynomialMode{{0.0, 1.0}, 2.0}}}};
  // e^e * e + e^e * cos(2e)
  EXPECT_NEAR(model_eval(block, std::exp(kE)), 51.2335190447213519, 1e-11);

  EXPECT_THROW(model_eval(plain, kE), DomainError);
  EXPECT_THROW(model_eval(plain, 2.0), DomainError);
}

TEST(ModelEval, PropertyZeroAmplitudesReduceToMainTerm) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> a(0.1, 5.0);
  std::uniform_real_distribution<double> r(-0.9, 3.0);
  std::uniform_real_distribution<double> x(3.0, 1e9);
  for (int i = 0; i < 200; ++i) {
    DecompositionModel m;
    m.a = a(rng);
    m.r = r(rng);
    m.main_osc = {{0.0, 1.3}, {0.0, -2.0}};
    m.blocks = {LowerBlock{m.r - 1.0, {PolynomialMode{{0.0, 0.0}, 1.0}}}};
    const double v = x(rng);
    ASSERT_DOUBLE_EQ(model_eval(m, v), m.a * v * std::pow(std::log(v), m.r));
  }
}

TEST(Models, Validation) {
  DecompositionModel bad;
  bad.a = 0.0;
  EXPECT_THROW(bad.validate(), DomainError);
  bad.a = 1.0;
  bad.r = -1.0;
  EXPECT_THROW(bad.validate(), DomainError);
  bad.r = 1.0;
  bad.main_osc = {{1.0, 0.0}};
  EXPECT_THROW(bad.validate(), DomainError);
  bad.main_osc.clear();
  bad.blocks = {LowerBlock{0.5, {}}, LowerBlock{0.5, {}}};
  EXPECT_THROW(bad.validate(), DomainError);
  bad.blocks = {LowerBlock{0.5, {}}, LowerBlock{0.2, {}}};
  EXPECT_NO_THROW(bad.validate());
}

TEST(Residual, Examples) {
  const auto classical = integer_counting_function(sieve_classical(1e3), 1e3);
  const DecompositionModel plain;
  const auto grid = numerics::geomspace(3.0, 1e3, 200);
  const auto table = residual_E(classical, plain, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_NEAR(table.e[i], std::floor(grid[i]) - grid[i], 1e-9);
    EXPECT_GT(table.e[i], -1.0);
    EXPECT_LE(table.e[i], 1e-9);
  }

  DecompositionModel small;
  small.a = 0.1;
  const auto tp = integer_counting_function(from_explicit_primes({2.0, 3.0}, "t"), 10.0);
  const std::vector<double> ten{10.0};
  EXPECT_NEAR(residual_E(tp, small, ten).e[0], 6.0, 1e-12);
}

TEST(Residual, PropertyModelSamplesGiveZero) {
  DecompositionModel m;
  m.a = 1.7;
  m.r = 0.4;
  m.main_osc = {{0.3, 2.0}};
  const auto grid = numerics::geomspace(3.0, 1e6, 300);
  std::vector<std::pair<double, double>> points;
  double previous = 0.0;
  // a step function whose value at each grid point equals the model
  for (double x : grid) {
    const double v = model_eval(m, x);
    points.emplace_back(x, v - previous);
    previous = v;
  }
  const auto fake_n = StepFunction::from_points(points);
  for (double e : residual_E(fake_n, m, grid).e) ASSERT_NEAR(e, 0.0, 1e-9 * 1e6);
}

TEST(AbsIntegral, ZeroResidualConverges) {
  const auto x = decade_grid(kE, 6, 32);
  const std::vector<double> zero(x.size(), 0.0);
  const auto r = check_E_abs_integral(x, zero);
  EXPECT_EQ(r.verdict, ConvergenceVerdict::converging);
  EXPECT_EQ(r.partial.back(), 0.0);
  EXPECT_EQ(r.limit_estimate, 0.0);
}

TEST(AbsIntegral, ClassicalResidualConverges) {
  const auto x = decade_grid(kE, 6, 32);
  std::vector<double> e;
  for (double u : x) e.push_back(std::floor(u) - u);
  const auto r = check_E_abs_integral(x, e);
  EXPECT_EQ(r.verdict, ConvergenceVerdict::converging);
  EXPECT_LE(r.limit_estimate, 1.0 / kE + 0.01);
  for (std::size_t k = 1; k < r.decades.increments.size(); ++k) {
    EXPECT_LT(r.decades.increments[k], r.decades.increments[k - 1]);
  }
}

TEST(AbsIntegral, LogarithmicResidualDiverges) {
  const auto x = decade_grid(kE, 15, 20);
  std::vector<double> e;
  for (double u : x) e.push_back(u / std::log(u));
  EXPECT_EQ(check_E_abs_integral(x, e).verdict, ConvergenceVerdict::diverging);
  // a short range cannot tell
  const auto short_x = decade_grid(kE, 6, 20);
  std::vector<double> short_e;
  for (double u : short_x) short_e.push_back(u / std::log(u));
  EXPECT_NE(check_E_abs_integral(short_x, short_e).verdict, ConvergenceVerdict::converging);
}

TEST(AbsIntegral, GridRules) {
  const auto coarse = decade_grid(kE, 5, 10);
  const std::vector<double> zero(coarse.size(), 0.0);
  EXPECT_THROW(check_E_abs_integral(coarse, zero), ReliabilityError);
  const auto lin = numerics::linspace(3.0, 1e5, 2000);
  const std::vector<double> zero2(lin.size(), 0.0);
  EXPECT_THROW(check_E_abs_integral(lin, zero2), DomainError);
  const auto low = numerics::geomspace(2.0, 2e5, 101);
  const std::vector<double> zero3(low.size(), 0.0);
  EXPECT_THROW(check_E_abs_integral(low, zero3), DomainError);
  const auto ok = decade_grid(kE, 3, 20);
  const std::vector<double> zero4(ok.size(), 0.0);
  EXPECT_EQ(check_E_abs_integral(ok, zero4).verdict, ConvergenceVerdict::inconclusive);
}

TEST(LogAverage, Examples) {
  const auto x = decade_grid(kE, 8, 32);
  const std::vector<double> zero(x.size(), 0.0);
  const auto r0 = check_E_log_average(x, zero);
  EXPECT_EQ(r0.verdict, BoundednessVerdict::bounded);
  for (double v : r0.ratio) EXPECT_EQ(v, 0.0);

  std::vector<double> classical;
  for (double u : x) classical.push_back(std::floor(u) - u);
  const auto rc = check_E_log_average(x, classical);
  EXPECT_EQ(rc.verdict, BoundednessVerdict::bounded);
  for (std::size_t i = 0; i < x.size(); ++i) {
    EXPECT_LE(rc.ratio[i], std::pow(std::log(x[i]), 2) / (2.0 * x[i]) + 1e-3);
  }

  const auto xl = decade_grid(kE, 15, 20);
  std::vector<double> slow;
  for (double u : xl) slow.push_back(u / std::log(u));
  const auto rs = check_E_log_average(xl, slow);
  EXPECT_EQ(rs.verdict, BoundednessVerdict::bounded);
  EXPECT_NEAR(rs.ratio.back(), 1.0, 1e-3);

  std::vector<double> growing;
  for (double u : xl) growing.push_back(u * std::log(u));
  EXPECT_EQ(check_E_log_average(xl, growing).verdict, BoundednessVerdict::unbounded_trend);
}

TEST(Transfer, ZeroClassicalAndDivergent) {
  const auto x = decade_grid(kE, 6, 32);
  const std::vector<double> zero(x.size(), 0.0);
  const auto r0 = transfer_functions_check(x, zero);
  EXPECT_EQ(r0.f1_partial.back(), 0.0);
  EXPECT_EQ(r0.sup_abs_f2, 0.0);

  std::vector<double> classical;
  for (double u : x) classical.push_back(std::floor(u) - u);
  const auto rc = transfer_functions_check(x, classical);
  EXPECT_LE(rc.f1_partial.back(), 1.0 / kE + 0.01);
  EXPECT_LT(rc.sup_abs_f2, 1.0);

  const auto xl = decade_grid(kE, 15, 20);
  std::vector<double> slow;
  for (double u : xl) slow.push_back(u / std::log(u));
  const auto rs = transfer_functions_check(xl, slow);
  EXPECT_EQ(rs.f1_verdict, ConvergenceVerdict::diverging);
  for (std::size_t k = 1; k < rs.decades.increments.size(); ++k) EXPECT_GT(rs.decades.increments[k], 0.0);
}

TEST(Transfer, PropertyChangeOfVariables) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> amp(-2.0, 2.0);
  std::uniform_real_distribution<double> freq(0.1, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = amp(rng);
    const double w = freq(rng);
    const auto x = decade_grid(kE, 5, 400);
    std::vector<double> e;
    for (double u : x) e.push_back(a * std::sqrt(u) * std::cos(w * std::log(u)) + 0.3 * u / (1.0 + std::log(u)));
    const auto abs_report = check_E_abs_integral(x, e);
    const auto transfer = transfer_functions_check(x, e);
    ASSERT_NEAR(abs_report.partial.back(), transfer.f1_partial.back(), 1e-4 * (1.0 + abs_report.partial.back()));
  }
}

TEST(ZetaModel, Transfer) {
  DecompositionModel m;
  auto z = n_model_to_zeta_model(m);
  EXPECT_NEAR(z.c, 1.0, 1e-14);
  EXPECT_EQ(z.rho, 1.0);

  m.a = 2.0;
  m.r = 1.0;
  z = n_model_to_zeta_model(m);
  EXPECT_NEAR(z.c, 2.0, 1e-13);
  EXPECT_EQ(z.rho, 2.0);

  m.a = 1.0;
  m.r = -0.5;
  z = n_model_to_zeta_model(m);
  EXPECT_EQ(z.rho, 0.5);
  EXPECT_NEAR(z.c, 1.77245385090551603, 1e-12);
}

TEST(ZetaModel, PropertyOrderingAndDegreesTransfer) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> gap(0.05, 0.5);
  std::uniform_int_distribution<int> degree(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    DecompositionModel m;
    m.r = 1.0;
    double r = m.r;
    std::vector<int> degrees;
    for (int j = 0; j < 4; ++j) {
      r -= gap(rng);
      const int d = degree(rng);
      degrees.push_back(d);
      m.blocks.push_back(LowerBlock{r, {PolynomialMode{std::vector<double>(d + 1, 1.0), 1.0}}});
    }
    const auto z = n_model_to_zeta_model(m);
    ASSERT_NO_THROW(z.validate());
    for (std::size_t j = 0; j < z.blocks.size(); ++j) {
      ASSERT_GT(j == 0 ? z.rho : z.blocks[j - 1].rho, z.blocks[j].rho);
      ASSERT_EQ(z.blocks[j].degree, degrees[j]);
      ASSERT_FALSE(z.blocks[j].coefficients_known);
    }
  }
}

TEST(Chebyshev, Verdicts) {
  const auto grid = numerics::geomspace(1e2, 1e6, 60);
  const auto classical = chebyshev_report(sieve_classical(1e6), grid);
  EXPECT_EQ(classical.verdict, ChebyshevVerdict::consistent);
  EXPECT_GE(classical.psi_min, 0.85);
  EXPECT_LE(classical.psi_max, 1.1);

  const auto tp = chebyshev_report(from_explicit_primes({2.0, 3.0}, "t"), grid);
  EXPECT_EQ(tp.verdict, ChebyshevVerdict::ratio_collapsing);

  const auto empty = chebyshev_report(from_explicit_primes({}, "e"), grid);
  EXPECT_EQ(empty.verdict, ChebyshevVerdict::ratio_collapsing);
  EXPECT_EQ(empty.psi_max, 0.0);

  EXPECT_THROW(chebyshev_report(sieve_classical(1e3), grid), CompletenessError);
  const std::vector<double> low{1.5};
  EXPECT_THROW(chebyshev_report(sieve_classical(1e3), low), DomainError);
}

TEST(Chebyshev, PropertyVerdictFollowsThresholds) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> prime(1.05, 10.0);
  const auto grid = numerics::geomspace(2.0, 1e4, 40);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> primes(1 + trial % 6);
    for (double& q : primes) q = prime(rng);
    const auto r = chebyshev_report(from_explicit_primes(primes, "r"), grid);
    const auto again = chebyshev_report(from_explicit_primes(primes, "r"), grid);
    ASSERT_EQ(r.verdict, again.verdict);
    if (r.verdict == ChebyshevVerdict::consistent) {
      ASSERT_GE(r.psi_min, 0.1);
      ASSERT_LE(r.psi_max, 10.0);
    }
  }
}

TEST(GrowthExponent, Examples) {
  const auto grid = numerics::geomspace(10.0, 1e6, 80);
  const auto classical = growth_exponent_check(integer_counting_function(sieve_classical(1e6), 1e6), grid);
  EXPECT_LE(classical.r_hat, 0.05);

  std::vector<double> xlogx;
  for (double x : grid) xlogx.push_back(x * std::log(x));
  EXPECT_NEAR(growth_exponent_check(grid, xlogx).r_hat, 1.0, 0.05);

  const auto empty = growth_exponent_check(integer_counting_function(from_explicit_primes({}, "e"), 1e6), grid);
  EXPECT_LT(empty.r_hat, -3.0);
  std::vector<double> zeros(grid.size(), 0.0);
  EXPECT_EQ(growth_exponent_check(grid, zeros).r_hat, -10.0);

  const std::vector<double> low{5.0, 10.0};
  const std::vector<double> ones{1.0, 1.0};
  EXPECT_THROW(growth_exponent_check(low, ones), DomainError);
}

}  // namespace
}  // namespace beurling
