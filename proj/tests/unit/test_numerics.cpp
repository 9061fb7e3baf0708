#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "beurling/errors.hpp"
#include "beurling/numerics.hpp"

namespace beurling::numerics {
namespace {

// Reference values computed with mpmath at 30 digits.
TEST(Numerics, GammaAgainstReference) {
  EXPECT_NEAR(gamma(0.5), 1.77245385090551603, 1e-14);
  EXPECT_NEAR(gamma(1.0), 1.0, 1e-14);
  EXPECT_NEAR(gamma(2.0), 1.0, 1e-14);
  EXPECT_NEAR(gamma(5.0), 24.0, 24.0 * 1e-13);
  EXPECT_NEAR(gamma(9.5) / 119292.461994609, 1.0, 1e-12);
  EXPECT_NEAR(gamma(-0.5), -3.54490770181103206, 1e-13);
  EXPECT_THROW(gamma(0.0), DomainError);
  EXPECT_THROW(gamma(-2.0), DomainError);
}

TEST(Numerics, SineIntegralAgainstReference) {
  EXPECT_NEAR(sine_integral(0.5), 0.493107418043066689, 1e-15);
  EXPECT_NEAR(sine_integral(1.0), 0.946083070367183015, 1e-15);
  EXPECT_NEAR(sine_integral(3.0), 1.848652527999468256, 1e-14);
  EXPECT_NEAR(sine_integral(10.0), 1.658347594218874049, 1e-14);
  EXPECT_NEAR(sine_integral(50.0), 1.551617072485935895, 1e-14);
  EXPECT_NEAR(sine_integral(-1.0), -0.946083070367183015, 1e-15);
  EXPECT_NEAR(sine_integral_complement(1000.0), std::numbers::pi / 2 - sine_integral(1000.0), 1e-14);
}

TEST(Numerics, SineIntegralContinuousAcrossSwitch) {
  EXPECT_NEAR(sine_integral(2.0 - 1e-12), sine_integral(2.0 + 1e-12), 1e-11);
}

TEST(Numerics, GaussLegendreIsExactForPolynomials) {
  auto p = [](double x) { return 3 * std::pow(x, 15) - x * x + 1.0; };
  // int_0^1 = 3/16 - 1/3 + 1
  EXPECT_NEAR(gauss_legendre8(p, 0.0, 1.0), 3.0 / 16 - 1.0 / 3 + 1.0, 1e-14);
}

TEST(Numerics, AdaptiveGaussLegendre) {
  bool ok = false;
  const double v = adaptive_gauss_legendre(
      [](double x) { return 1.0 / (1.0 + 1e4 * (x - 0.3) * (x - 0.3)); }, 0.0, 1.0, 1e-12, 0.0, 40, &ok);
  EXPECT_TRUE(ok);
  EXPECT_NEAR(v, (std::atan(70.0) + std::atan(30.0)) / 100.0, 1e-13);
  // a power singularity at an endpoint defeats a purely relative tolerance
  adaptive_gauss_legendre([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12, 0.0, 20, &ok);
  EXPECT_FALSE(ok);
}

TEST(Numerics, SimpsonAndTrapezoid) {
  const auto x = linspace(0.0, 1.0, 101);
  std::vector<double> y;
  for (double v : x) y.push_back(v * v * v);
  EXPECT_NEAR(simpson<double>(y, 0.01), 0.25, 1e-14);
  EXPECT_NEAR(trapezoid(x, y), 0.25, 1e-4);
  const auto c = cumulative_trapezoid(x, y);
  EXPECT_EQ(c.front(), 0.0);
  EXPECT_DOUBLE_EQ(c.back(), trapezoid(x, y));
}

TEST(Numerics, Grids) {
  const auto g = geomspace(1.0, 1000.0, 4);
  EXPECT_EQ(g.front(), 1.0);
  EXPECT_EQ(g.back(), 1000.0);
  EXPECT_NEAR(g[1], 10.0, 1e-12);
  EXPECT_THROW(geomspace(0.0, 1.0, 3), DomainError);
  EXPECT_EQ(linspace(2.0, 3.0, 1).size(), 1u);
}

}  // namespace
}  // namespace beurling::numerics
