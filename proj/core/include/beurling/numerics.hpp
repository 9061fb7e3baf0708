#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace beurling::numerics {

/// Gamma function: Lanczos approximation (g = 7, 9 terms) with reflection
/// below 1/2. Relative error is below 1e-13 on (0, 10].
double gamma(double x);

/// Sine integral Si(x) = int_0^x sin(t)/t dt.
double sine_integral(double x);

/// pi/2 - Si(x) for x > 0, computed without cancellation for large x.
double sine_integral_complement(double x);

/// Eight-point Gauss-Legendre rule on [a, b].
double gauss_legendre8(const std::function<double(double)>& f, double a, double b);

/// Adaptive bisection of eight-point Gauss-Legendre panels. Stops when
/// |coarse - refined| <= max(abs_tol, rel_tol * |refined|) or depth runs out;
/// `converged` (optional) reports which.
double adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                               double rel_tol, double abs_tol, int max_depth = 30,
                               bool* converged = nullptr);

/// Composite Simpson rule on uniformly spaced samples (odd count >= 3).
template <typename T>
T simpson(std::span<const T> samples, double step) {
  const std::size_t n = samples.size();
  T acc = samples[0] + samples[n - 1];
  for (std::size_t i = 1; i + 1 < n; ++i) acc += samples[i] * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * (step / 3.0);
}

/// Trapezoid rule on a possibly non-uniform grid.
double trapezoid(std::span<const double> x, std::span<const double> y);

/// Running trapezoid integral; result[0] = 0.
std::vector<double> cumulative_trapezoid(std::span<const double> x, std::span<const double> y);

/// n points from lo to hi inclusive, uniform or geometric.
std::vector<double> linspace(double lo, double hi, std::size_t n);
std::vector<double> geomspace(double lo, double hi, std::size_t n);

}  // namespace beurling::numerics
