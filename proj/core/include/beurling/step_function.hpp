#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace beurling {

/// Right-continuous step function F(x) = sum of weights at jumps <= x.
///
/// Used for the counting functions N, pi, Pi and psi (jump locations are
/// generalized integers or prime powers) and for their log-scale versions
/// such as S(x) = psi(e^x), where the jump locations are logarithms.
/// F vanishes to the left of the first jump.
class StepFunction {
 public:
  /// Relative tolerance under which two jump locations are merged.
  static constexpr double kMergeTolerance = 1e-12;

  StepFunction() = default;

  /// Builds from unsorted (location, weight) pairs. Locations closer than
  /// kMergeTolerance * (1 + |location|) are merged and their weights summed.
  /// Weights must be finite; zero-weight jumps are dropped.
  static StepFunction from_points(std::vector<std::pair<double, double>> points);

  /// Builds from jumps that are already strictly increasing.
  static StepFunction from_sorted(std::vector<double> jumps, std::vector<double> weights);

  double operator()(double x) const;
  /// Value of F just to the left of x.
  double left_limit(double x) const;

  std::span<const double> jumps() const { return jumps_; }
  std::span<const double> weights() const { return weights_; }
  std::span<const double> cumulative() const { return cumulative_; }
  std::size_t size() const { return jumps_.size(); }
  bool empty() const { return jumps_.empty(); }
  double total() const { return cumulative_.empty() ? 0.0 : cumulative_.back(); }

  /// Restriction to jumps <= x_max.
  StepFunction truncated(double x_max) const;

  /// Same function in the log scale: jump at log(u) for each jump u > 0.
  StepFunction log_scale() const;

 private:
  std::vector<double> jumps_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

/// Stieltjes sum  sum_j w_j u_j^{-s}  over the jumps u_j of F (all > 0).
std::complex<double> mellin_stieltjes(const StepFunction& f, std::complex<double> s);

}  // namespace beurling
