#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "beurling/number_system.hpp"
#include "beurling/step_function.hpp"

namespace beurling {

enum class KernelBase { fejer };

/// Dilated Fejer kernel phi_n(x) = phi(x/n)/n with
///   phi(x) = (1 - cos x)/(pi x^2) = (1/(2 pi)) (sin(x/2)/(x/2))^2,
///   phi_hat(t) = max(0, 1 - |t|),
/// so phi_n >= 0, int phi_n = 1 and phi_hat_n vanishes for |t| >= 1/n.
struct Kernel {
  KernelBase base = KernelBase::fejer;
  int n = 1;

  double operator()(double x) const;
  double fourier(double t) const;
  double half_support_fourier() const { return 1.0 / n; }
  /// int_{-inf}^z phi_n.
  double cdf(double z) const;
  /// int_z^inf phi_n, accurate for large z.
  double upper_tail(double z) const;
  /// 1 - int_{-T}^{T} phi_n.
  double mass_outside(double half_width) const;
  /// Sharp bound for mass_outside: 2n/(pi T) + 2n^2/(pi T^2).
  double mass_outside_bound(double half_width) const;
  /// Smallest z with upper_tail(z) <= mass.
  double tail_quantile(double mass) const;
};

/// Throws DomainError for n < 1.
Kernel make_kernel(int n);

/// A real signal S on [0, x_max] in the x = log u scale: an optional smooth
/// part plus a right-continuous step part. S = 0 for x < 0.
struct XSignal {
  std::function<double(double)> smooth;
  /// Optional e^{-x} smooth(x), for smooth parts that overflow before the
  /// damping is applied.
  std::function<double(double)> damped_smooth;
  StepFunction steps;
  double x_max = std::numeric_limits<double>::infinity();

  double operator()(double x) const;
  double left_limit(double x) const;
  /// e^{-x} S(x).
  double damped(double x) const;

  static XSignal from_steps(StepFunction steps, double x_max);
  static XSignal from_function(std::function<double(double)> fn,
                               double x_max = std::numeric_limits<double>::infinity(),
                               std::function<double(double)> damped = {});
};

enum class DecreaseClass { non_decreasing, strongly_slowly_decreasing, boundedly_decreasing, unbounded_decrease };

const char* to_string(DecreaseClass c);

struct SlowDecreaseProfile {
  std::vector<double> x;
  /// max(0, -min_{x <= y <= x + delta} (S(y) - S(x)) / e^x)
  std::vector<double> eta_hat;
  /// Non-increasing envelope: running maximum of eta_hat from the right.
  std::vector<double> envelope;
  /// Maximum of eta_hat over each segment used by the classification.
  std::vector<double> segment_max;
  double delta = 0.25;
  DecreaseClass classification = DecreaseClass::non_decreasing;
};

/// The window minimum is exact for the step part (it is attained at a window
/// end or just before a jump) and found by sampling plus golden-section
/// refinement for the smooth part.
///
/// Classification, with segments of length log 10 (or quarters of the range
/// when it is shorter than four of them):
///   non-decreasing               eta_hat <= 1e-12 everywhere;
///   unbounded-decrease           from the first segment with a positive
///                                maximum on, at least three segments, each
///                                maximum >= 1.05x the one before and the last
///                                > 2x the first;
///   strongly-slowly-decreasing   envelope end <= 0.05 x envelope start and
///                                the max over the last two segments
///                                <= 0.5 x the largest segment max;
///   boundedly-decreasing         otherwise.
///
/// Throws DomainError if delta <= 0, the grid is empty or not increasing, or
/// a window reaches past S.x_max.
SlowDecreaseProfile slow_decrease_profile(const XSignal& s, double delta, std::span<const double> x_grid);

struct IteratedBound {
  bool holds = true;
  /// lhs - rhs; negative on failure.
  double margin = 0.0;
  double lhs = 0.0;  // S(x+h) - S(x)
  double rhs = 0.0;  // -eta(x) e^x (1 + h e^h)
};

/// S(x+h) - S(x) >= -eta(x) e^x (1 + h e^h), up to a rounding allowance of
/// 1e-9 relative to the magnitudes involved. Throws DomainError for h < 0.
IteratedBound iterated_bound_check(const XSignal& s, const std::function<double(double)>& eta, double x, double h);

struct MollifierValue {
  double value = 0.0;
  /// Kernel mass to the right of the data range, x > x_max.
  double mass_beyond = 0.0;
  /// mass_beyond times max e^{-x} S(x) over the top half of the data range.
  double trunc_bound = 0.0;
  /// Upper end of integration actually used.
  double x_end = 0.0;
};

inline constexpr double kTruncationBudget = 1e-3;

/// A(y, n) = int_0^inf e^{-x} S(x) phi_n(x - y) dx over [0, min(x_max, cut)],
/// by adaptive Gauss-Legendre on panels split at the jumps of S.
/// Throws TruncationError (with the needed x_max) if the kernel mass beyond
/// x_max exceeds `budget`. When x_max is infinite the integral is cut where
/// the remaining kernel mass is 1e-6.
MollifierValue mollifier_convolution(const XSignal& s, const Kernel& kernel, double y,
                                     double budget = kTruncationBudget);

struct WienerIkeharaRow {
  double y = 0.0;
  double a_value = 0.0;  // A(y, n)
  double deviation = 0.0;
  double trunc_bound = 0.0;
};

struct WienerIkeharaReport {
  double a = 1.0;
  int n = 1;
  double x_data_max = 0.0;
  std::vector<WienerIkeharaRow> rows;
  /// First y from which A >= a/2 holds for every later grid point.
  std::optional<double> lock_y;
  /// min of S(y)/e^y over the top half of the y grid.
  double liminf_ratio = 0.0;
  double max_abs_deviation = 0.0;
};

/// S = psi(e^x) of the system. For systems whose prime list is complete the
/// data range is chosen to meet the truncation budget; otherwise it is
/// log(x_max_supported) and TruncationError propagates.
WienerIkeharaReport wiener_ikehara_probe(const GeneralizedPrimeSystem& system, double a, int n,
                                         std::span<const double> y_grid,
                                         double budget = kTruncationBudget);

struct SmoothingRow {
  int n = 1;
  double norm = 0.0;            // ||f * phi_n - f_hat(0) phi_n||_1 on the truncated domain
  double tail_bound = 0.0;      // bound for the part outside the domain
  double sampling_error = 0.0;  // change when every other sample is dropped
};

/// f given by an odd number (>= 5) of samples on a uniform grid, zero
/// outside it, integrated by the trapezoid rule. The L1 norm runs over the support widened by 1000 n on
/// both sides. Throws ReliabilityError if a sampling-error estimate exceeds
/// 1e-6, DomainError on a bad grid or n < 1.
std::vector<SmoothingRow> korevaar_smoothing_check(std::span<const double> x, std::span<const double> f,
                                                   std::span<const int> n_list);

}  // namespace beurling
