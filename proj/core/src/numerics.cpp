#include "beurling/numerics.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "beurling/errors.hpp"

namespace beurling::numerics {

double gamma(double x) {
  constexpr std::array<double, 9> kLanczos = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double kG = 7.0;
  if (!std::isfinite(x)) throw DomainError("gamma: non-finite argument");
  if (x <= 0.0 && x == std::floor(x)) throw DomainError("gamma: pole at a non-positive integer");
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
  }
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

namespace {

double sine_integral_series(double x) {
  // sum_k (-1)^k x^{2k+1} / ((2k+1) (2k+1)!)
  double term = x;  // x^{2k+1} / (2k+1)!
  double sum = x;
  const double x2 = x * x;
  for (int k = 1; k < 60; ++k) {
    term *= -x2 / static_cast<double>((2 * k) * (2 * k + 1));
    const double add = term / static_cast<double>(2 * k + 1);
    sum += add;
    if (std::abs(add) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Continued fraction for E1(ix) (modified Lentz); returns pi/2 - Si(x), x > 2.
double sine_integral_complement_cf(double x) {
  using C = std::complex<double>;
  constexpr double kTiny = 1e-300;
  C b(1.0, x);
  C c(1.0 / kTiny, 0.0);
  C d = 1.0 / b;
  C h = d;
  for (int i = 2; i < 10000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16) break;
  }
  h *= C(std::cos(x), -std::sin(x));
  return -h.imag();
}

}  // namespace

double sine_integral(double x) {
  if (x < 0.0) return -sine_integral(-x);
  if (x <= 2.0) return sine_integral_series(x);
  return std::numbers::pi / 2.0 - sine_integral_complement_cf(x);
}

double sine_integral_complement(double x) {
  if (!(x > 0.0)) throw DomainError("sine_integral_complement: needs x > 0");
  if (x <= 2.0) return std::numbers::pi / 2.0 - sine_integral_series(x);
  return sine_integral_complement_cf(x);
}

double gauss_legendre8(const std::function<double(double)>& f, double a, double b) {
  constexpr std::array<double, 4> kNodes = {0.1834346424956498, 0.5255324099163290,
                                            0.7966664774136267, 0.9602898564975363};
  constexpr std::array<double, 4> kWeights = {0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < kNodes.size(); ++i) {
    const double dx = half * kNodes[i];
    acc += kWeights[i] * (f(mid - dx) + f(mid + dx));
  }
  return acc * half;
}

namespace {

double adaptive_step(const std::function<double(double)>& f, double a, double b, double whole,
                     double rel_tol, double abs_tol, int depth, bool& ok) {
  const double mid = 0.5 * (a + b);
  const double left = gauss_legendre8(f, a, mid);
  const double right = gauss_legendre8(f, mid, b);
  const double refined = left + right;
  if (std::abs(refined - whole) <= std::max(abs_tol, rel_tol * std::abs(refined))) return refined;
  if (depth <= 0) {
    ok = false;
    return refined;
  }
  return adaptive_step(f, a, mid, left, rel_tol, 0.5 * abs_tol, depth - 1, ok) +
         adaptive_step(f, mid, b, right, rel_tol, 0.5 * abs_tol, depth - 1, ok);
}

}  // namespace

double adaptive_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                               double rel_tol, double abs_tol, int max_depth, bool* converged) {
  bool ok = true;
  const double whole = gauss_legendre8(f, a, b);
  const double result = adaptive_step(f, a, b, whole, rel_tol, abs_tol, max_depth, ok);
  if (converged != nullptr) *converged = ok;
  return result;
}

double trapezoid(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) acc += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return acc;
}

std::vector<double> cumulative_trapezoid(std::span<const double> x, std::span<const double> y) {
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t i = 1; i < x.size(); ++i) {
    out[i] = out[i - 1] + 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  }
  return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = hi;
  return out;
}

std::vector<double> geomspace(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw DomainError("geometric grid needs positive bounds");
  auto out = linspace(std::log(lo), std::log(hi), n);
  for (double& v : out) v = std::exp(v);
  if (!out.empty()) {
    out.front() = lo;
    out.back() = hi;
  }
  return out;
}

}  // namespace beurling::numerics
