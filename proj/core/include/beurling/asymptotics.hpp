#pragma once

#include <span>
#include <vector>

#include "beurling/models.hpp"
#include "beurling/number_system.hpp"
#include "beurling/step_function.hpp"

namespace beurling {

/// Main-term model of N at x > e. Throws DomainError for x <= e.
double model_eval(const DecompositionModel& model, double x);

struct ResidualTable {
  std::vector<double> x;
  std::vector<double> n;
  std::vector<double> model;
  std::vector<double> e;  // N(x) - model(x)
};

ResidualTable residual_E(const StepFunction& N, const DecompositionModel& model,
                         std::span<const double> x_grid);

enum class ConvergenceVerdict { converging, inconclusive, diverging };
enum class BoundednessVerdict { bounded, unbounded_trend, inconclusive };

const char* to_string(ConvergenceVerdict v);
const char* to_string(BoundednessVerdict v);

/// Decade bookkeeping shared by the integral diagnostics. Decade k runs from
/// x0 * 10^{k-1} to x0 * 10^k, where x0 is the first grid point.
struct DecadeTrend {
  std::vector<double> ends;        // x0 * 10^k, k = 1..K
  std::vector<double> increments;  // growth of the tracked quantity across each decade
};

struct AbsIntegralReport {
  std::vector<double> x;
  std::vector<double> partial;  // I(x) = int_{x0}^x |E(u)|/u^2 du
  DecadeTrend decades;
  ConvergenceVerdict verdict = ConvergenceVerdict::inconclusive;
  /// I(X) plus a geometric tail extrapolated from the decade ratios; +inf
  /// when diverging, NaN when inconclusive.
  double limit_estimate = 0.0;
};

/// Verdict: converging if each of the last three decade increments is below
/// 0.5x its predecessor, diverging if each is above 0.9x, inconclusive
/// otherwise or when fewer than four whole decades are covered.
///
/// Throws DomainError unless the grid is geometric and starts at or above e,
/// ReliabilityError if it has fewer than 16 points per decade.
AbsIntegralReport check_E_abs_integral(std::span<const double> x, std::span<const double> e);

struct LogAverageReport {
  std::vector<double> x;
  std::vector<double> ratio;        // R(x) = |int_{x0}^x E(u) log u / u du| / x
  std::vector<double> decade_max;   // max of R over each decade
  BoundednessVerdict verdict = BoundednessVerdict::inconclusive;
};

/// Verdict: unbounded-trend if the decade maxima rose across each of the last
/// three decades and no rise was less than half the one before; bounded
/// otherwise; inconclusive below four whole decades. Grid rules as above.
LogAverageReport check_E_log_average(std::span<const double> x, std::span<const double> e);

/// rho = r + 1, c = a Gamma(r + 1), rho_j = r_j + 1. Block polynomials carry
/// only their degree.
ZetaSingularModel n_model_to_zeta_model(const DecompositionModel& model);

struct TransferReport {
  std::vector<double> x;           // log u
  std::vector<double> f1;          // e^{-x} E(e^x)
  std::vector<double> f1_partial;  // int_{x0}^x |f1|
  std::vector<double> f2;          // e^{-x} int_{u0}^{e^x} E(y) log y / y dy
  double sup_abs_f2 = 0.0;
  DecadeTrend decades;
  ConvergenceVerdict f1_verdict = ConvergenceVerdict::inconclusive;
};

/// E sampled on a geometric u-grid, so x = log u is uniform.
TransferReport transfer_functions_check(std::span<const double> u, std::span<const double> e);

enum class ChebyshevVerdict { consistent, ratio_collapsing, ratio_exploding };

const char* to_string(ChebyshevVerdict v);

struct ChebyshevReport {
  std::vector<double> x;
  std::vector<double> psi_ratio;  // psi(x)/x
  std::vector<double> pi_ratio;   // pi(x) log x / x
  double psi_min = 0.0;           // over the top half of the grid
  double psi_max = 0.0;
  double pi_min = 0.0;
  double pi_max = 0.0;
  ChebyshevVerdict verdict = ChebyshevVerdict::consistent;
};

/// Verdict on psi(x)/x over the top half of the grid: collapsing below 0.1,
/// exploding above 10, consistent otherwise.
ChebyshevReport chebyshev_report(const GeneralizedPrimeSystem& system, std::span<const double> x_grid);

struct GrowthExponentReport {
  std::vector<double> x;
  std::vector<double> local;  // log(N(x)/x) / log log x, floored at -10
  double r_hat = -10.0;       // max of `local` over the top two decades
};

/// Throws DomainError if any grid point is <= e^2 or the grid is not
/// increasing.
GrowthExponentReport growth_exponent_check(std::span<const double> x, std::span<const double> n);
GrowthExponentReport growth_exponent_check(const StepFunction& N, std::span<const double> x);

}  // namespace beurling
