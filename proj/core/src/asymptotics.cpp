#include "beurling/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "beurling/errors.hpp"
#include "beurling/numerics.hpp"

namespace beurling {

namespace {

constexpr double kFloor = -10.0;

double poly_eval(const std::vector<double>& coefficients, double w) {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * w + *it;
  return acc;
}

void require_same_size(std::span<const double> x, std::span<const double> y, const char* what) {
  if (x.size() != y.size()) {
    std::ostringstream os;
    os << what << ": grid and values differ in length (" << x.size() << " vs " << y.size() << ")";
    throw DomainError(os.str());
  }
}

// Validates a geometric grid from x0 >= e and returns its points per decade.
double require_geometric(std::span<const double> x, const char* what) {
  if (x.size() < 2) throw DomainError(std::string(what) + ": grid needs at least two points");
  if (x[0] < std::numbers::e * (1.0 - 1e-12)) {
    throw DomainError(std::string(what) + ": grid must start at or above e");
  }
  const double ratio = x[1] / x[0];
  if (!(ratio > 1.0)) throw DomainError(std::string(what) + ": grid must be increasing");
  const double log_ratio = std::log(ratio);
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double lr = std::log(x[i] / x[i - 1]);
    if (std::abs(lr - log_ratio) > 1e-6 * log_ratio) {
      throw DomainError(std::string(what) + ": grid must be geometric (constant ratio)");
    }
  }
  const double per_decade = std::log(10.0) / log_ratio;
  if (per_decade < 16.0 - 1e-9) {
    std::ostringstream os;
    os << what << ": grid has " << per_decade
       << " points per decade; at least 16 are needed for a reliable diagnostic";
    throw ReliabilityError(os.str());
  }
  return per_decade;
}

// Value of a cumulative table at position `target`, linear in log x.
double interpolate_log(std::span<const double> x, std::span<const double> y, double target) {
  auto it = std::lower_bound(x.begin(), x.end(), target);
  if (it == x.end()) return y.back();
  const std::size_t i = static_cast<std::size_t>(it - x.begin());
  if (i == 0 || *it == target) return y[i];
  const double t = std::log(target / x[i - 1]) / std::log(x[i] / x[i - 1]);
  return y[i - 1] + t * (y[i] - y[i - 1]);
}

std::size_t whole_decades(std::span<const double> x) {
  return static_cast<std::size_t>(std::floor(std::log10(x.back() / x.front()) + 1e-9));
}

DecadeTrend decade_increments(std::span<const double> x, std::span<const double> cumulative) {
  DecadeTrend trend;
  const std::size_t k_max = whole_decades(x);
  double previous = cumulative.front();
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double end = x.front() * std::pow(10.0, static_cast<double>(k));
    const double value = interpolate_log(x, cumulative, std::min(end, x.back()));
    trend.ends.push_back(end);
    trend.increments.push_back(value - previous);
    previous = value;
  }
  return trend;
}

ConvergenceVerdict convergence_verdict(const DecadeTrend& trend, double* worst_ratio) {
  const auto& inc = trend.increments;
  *worst_ratio = 0.0;
  if (inc.size() < 4) return ConvergenceVerdict::inconclusive;
  bool all_small = true;
  bool all_large = true;
  for (std::size_t k = inc.size() - 3; k < inc.size(); ++k) {
    double ratio = 0.0;
    if (inc[k - 1] > 0.0) {
      ratio = inc[k] / inc[k - 1];
    } else if (inc[k] > 0.0) {
      ratio = std::numeric_limits<double>::infinity();
    }
    *worst_ratio = std::max(*worst_ratio, ratio);
    all_small = all_small && ratio < 0.5;
    all_large = all_large && ratio > 0.9;
  }
  if (all_small) return ConvergenceVerdict::converging;
  if (all_large) return ConvergenceVerdict::diverging;
  return ConvergenceVerdict::inconclusive;
}

double limit_estimate(ConvergenceVerdict verdict, const DecadeTrend& trend, double total, double ratio) {
  switch (verdict) {
    case ConvergenceVerdict::converging:
      return total + trend.increments.back() * ratio / (1.0 - ratio);
    case ConvergenceVerdict::diverging:
      return std::numeric_limits<double>::infinity();
    case ConvergenceVerdict::inconclusive:
      break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

const char* to_string(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::converging: return "converging";
    case ConvergenceVerdict::inconclusive: return "inconclusive";
    case ConvergenceVerdict::diverging: return "diverging";
  }
  return "inconclusive";
}

const char* to_string(BoundednessVerdict v) {
  switch (v) {
    case BoundednessVerdict::bounded: return "bounded";
    case BoundednessVerdict::unbounded_trend: return "unbounded-trend";
    case BoundednessVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

const char* to_string(ChebyshevVerdict v) {
  switch (v) {
    case ChebyshevVerdict::consistent: return "consistent-with-Chebyshev";
    case ChebyshevVerdict::ratio_collapsing: return "ratio-collapsing";
    case ChebyshevVerdict::ratio_exploding: return "ratio-exploding";
  }
  return "consistent-with-Chebyshev";
}

double model_eval(const DecompositionModel& model, double x) {
  if (!(x > std::numbers::e)) {
    std::ostringstream os;
    os << "model_eval: x = " << x << " must exceed e";
    throw DomainError(os.str());
  }
  const double log_x = std::log(x);
  const double log_log_x = std::log(log_x);
  double main = model.a;
  for (const auto& term : model.main_osc) main += term.amplitude * std::cos(term.theta * log_x);
  double value = x * main * std::pow(log_x, model.r);
  for (const auto& block : model.blocks) {
    double modes = 0.0;
    for (const auto& mode : block.modes) modes += poly_eval(mode.poly, log_log_x) * std::cos(mode.theta * log_x);
    value += x * std::pow(log_x, block.r) * modes;
  }
  return value;
}

ResidualTable residual_E(const StepFunction& N, const DecompositionModel& model,
                         std::span<const double> x_grid) {
  ResidualTable table;
  table.x.assign(x_grid.begin(), x_grid.end());
  for (double x : x_grid) {
    const double n = N(x);
    const double m = model_eval(model, x);
    table.n.push_back(n);
    table.model.push_back(m);
    table.e.push_back(n - m);
  }
  return table;
}

AbsIntegralReport check_E_abs_integral(std::span<const double> x, std::span<const double> e) {
  require_same_size(x, e, "check_E_abs_integral");
  require_geometric(x, "check_E_abs_integral");
  AbsIntegralReport report;
  report.x.assign(x.begin(), x.end());
  std::vector<double> integrand(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) integrand[i] = std::abs(e[i]) / (x[i] * x[i]);
  report.partial = numerics::cumulative_trapezoid(x, integrand);
  report.decades = decade_increments(x, report.partial);
  double ratio = 0.0;
  report.verdict = convergence_verdict(report.decades, &ratio);
  report.limit_estimate = limit_estimate(report.verdict, report.decades, report.partial.back(), ratio);
  return report;
}

LogAverageReport check_E_log_average(std::span<const double> x, std::span<const double> e) {
  require_same_size(x, e, "check_E_log_average");
  require_geometric(x, "check_E_log_average");
  LogAverageReport report;
  report.x.assign(x.begin(), x.end());
  std::vector<double> integrand(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) integrand[i] = e[i] * std::log(x[i]) / x[i];
  const auto cumulative = numerics::cumulative_trapezoid(x, integrand);
  report.ratio.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) report.ratio[i] = std::abs(cumulative[i]) / x[i];

  const std::size_t k_max = whole_decades(x);
  std::size_t i = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const double end = x.front() * std::pow(10.0, static_cast<double>(k)) * (1.0 + 1e-12);
    double m = 0.0;
    while (i < x.size() && x[i] <= end) m = std::max(m, report.ratio[i++]);
    report.decade_max.push_back(m);
  }
  const auto& dm = report.decade_max;
  if (dm.size() < 4) {
    report.verdict = BoundednessVerdict::inconclusive;
    return report;
  }
  bool rising = true;
  double previous_rise = dm[dm.size() - 3] - dm[dm.size() - 4];
  if (!(previous_rise > 0.0)) rising = false;
  for (std::size_t k = dm.size() - 2; k < dm.size() && rising; ++k) {
    const double rise = dm[k] - dm[k - 1];
    if (!(rise > 0.0) || rise < 0.5 * previous_rise) rising = false;
    previous_rise = rise;
  }
  report.verdict = rising ? BoundednessVerdict::unbounded_trend : BoundednessVerdict::bounded;
  return report;
}

ZetaSingularModel n_model_to_zeta_model(const DecompositionModel& model) {
  model.validate();
  ZetaSingularModel out;
  out.rho = model.r + 1.0;
  out.c = model.a * numerics::gamma(out.rho);
  for (const auto& block : model.blocks) {
    SingularBlock sb;
    sb.rho = block.r + 1.0;
    int degree = 0;
    for (const auto& mode : block.modes) {
      degree = std::max(degree, static_cast<int>(mode.poly.size()) - 1);
    }
    sb.degree = degree;
    sb.coefficients_known = false;
    out.blocks.push_back(sb);
  }
  out.validate();
  return out;
}

TransferReport transfer_functions_check(std::span<const double> u, std::span<const double> e) {
  require_same_size(u, e, "transfer_functions_check");
  require_geometric(u, "transfer_functions_check");
  TransferReport report;
  report.x.resize(u.size());
  report.f1.resize(u.size());
  std::vector<double> abs_f1(u.size());
  std::vector<double> weighted(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    report.x[i] = std::log(u[i]);
    report.f1[i] = e[i] / u[i];
    abs_f1[i] = std::abs(report.f1[i]);
    weighted[i] = e[i] * std::log(u[i]) / u[i];
  }
  report.f1_partial = numerics::cumulative_trapezoid(report.x, abs_f1);
  const auto inner = numerics::cumulative_trapezoid(u, weighted);
  report.f2.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    report.f2[i] = inner[i] / u[i];
    report.sup_abs_f2 = std::max(report.sup_abs_f2, std::abs(report.f2[i]));
  }
  report.decades = decade_increments(u, report.f1_partial);
  double ratio = 0.0;
  report.f1_verdict = convergence_verdict(report.decades, &ratio);
  return report;
}

ChebyshevReport chebyshev_report(const GeneralizedPrimeSystem& system, std::span<const double> x_grid) {
  if (x_grid.empty()) throw DomainError("chebyshev_report: empty grid");
  double top = 0.0;
  for (double x : x_grid) {
    if (!(x >= 2.0)) throw DomainError("chebyshev_report: grid points must be >= 2");
    top = std::max(top, x);
  }
  system.require_supported(top, "chebyshev_report");
  const CountingFunctions counts = prime_counting_functions(system, top);
  ChebyshevReport report;
  report.x.assign(x_grid.begin(), x_grid.end());
  for (double x : x_grid) {
    report.psi_ratio.push_back(counts.psi(x) / x);
    report.pi_ratio.push_back(counts.pi(x) * std::log(x) / x);
  }
  const std::size_t start = x_grid.size() / 2;
  report.psi_min = report.pi_min = std::numeric_limits<double>::infinity();
  report.psi_max = report.pi_max = -std::numeric_limits<double>::infinity();
  for (std::size_t i = start; i < x_grid.size(); ++i) {
    report.psi_min = std::min(report.psi_min, report.psi_ratio[i]);
    report.psi_max = std::max(report.psi_max, report.psi_ratio[i]);
    report.pi_min = std::min(report.pi_min, report.pi_ratio[i]);
    report.pi_max = std::max(report.pi_max, report.pi_ratio[i]);
  }
  if (report.psi_min < 0.1) {
    report.verdict = ChebyshevVerdict::ratio_collapsing;
  } else if (report.psi_max > 10.0) {
    report.verdict = ChebyshevVerdict::ratio_exploding;
  } else {
    report.verdict = ChebyshevVerdict::consistent;
  }
  return report;
}

GrowthExponentReport growth_exponent_check(std::span<const double> x, std::span<const double> n) {
  require_same_size(x, n, "growth_exponent_check");
  if (x.empty()) throw DomainError("growth_exponent_check: empty grid");
  const double e2 = std::exp(2.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > e2)) throw DomainError("growth_exponent_check: grid points must exceed e^2");
    if (i > 0 && !(x[i] > x[i - 1])) throw DomainError("growth_exponent_check: grid must be increasing");
  }
  GrowthExponentReport report;
  report.x.assign(x.begin(), x.end());
  const double cutoff = x.back() / 100.0 * (1.0 - 1e-12);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double local = kFloor;
    if (n[i] > 0.0) local = std::max(kFloor, std::log(n[i] / x[i]) / std::log(std::log(x[i])));
    report.local.push_back(local);
    if (x[i] >= cutoff) report.r_hat = std::max(report.r_hat, local);
  }
  return report;
}

GrowthExponentReport growth_exponent_check(const StepFunction& N, std::span<const double> x) {
  std::vector<double> n;
  n.reserve(x.size());
  for (double v : x) n.push_back(N(v));
  return growth_exponent_check(x, n);
}

}  // namespace beurling
