#include "beurling/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "beurling/asymptotics.hpp"
#include "beurling/errors.hpp"
#include "beurling/numerics.hpp"

namespace beurling {

namespace {

void require_half_plane(ComplexPoint s, const char* what) {
  if (!(s.sigma > 1.0)) {
    std::ostringstream os;
    os << what << ": sigma = " << s.sigma
       << " is outside the half-plane of convergence sigma > 1";
    throw DivergenceError(os.str());
  }
}

// Observed growth exponent of a counting function on its top two decades,
// floored at 0; used only for the envelope tail bound.
double envelope_growth(const StepFunction& f, double x_max) {
  const double lo = std::max(std::exp(2.0) * 1.0001, x_max / 100.0);
  if (!(x_max > lo) || f.empty()) return 0.0;
  const auto grid = numerics::geomspace(lo, x_max, 64);
  std::vector<double> values;
  values.reserve(grid.size());
  for (double x : grid) values.push_back(f(x));
  return std::max(0.0, growth_exponent_check(grid, values).r_hat);
}

}  // namespace

ZetaEvaluator::ZetaEvaluator(const GeneralizedPrimeSystem& system, double x_max,
                             std::optional<DecompositionModel> model)
    : system_(system), x_max_(x_max), counts_(counting_functions(system, x_max)) {
  if (!system_.is_complete()) {
    if (model) {
      n_growth_r_ = std::max(0.0, model->r);
    } else {
      n_growth_r_ = envelope_growth(counts_.N, x_max_);
    }
    psi_growth_r_ = envelope_growth(counts_.psi, x_max_);
  }
}

double ZetaEvaluator::envelope_tail(const StepFunction& f, double growth_r, ComplexPoint s) const {
  const double big_x = x_max_;
  const double fx = f(big_x);
  if (fx == 0.0 || !(big_x > 1.0)) {
    // nothing observed yet: no envelope can be anchored
    return fx == 0.0 && big_x > 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  const double log_x = std::log(big_x);
  const double eps = s.sigma - 1.0;
  // int_{L}^{inf} e^{-eps u} u^r du
  double integral = 0.0;
  if (growth_r == 0.0) {
    integral = std::exp(-eps * log_x) / eps;
  } else {
    const double peak = std::max(log_x, growth_r / eps);
    const double upper = peak + 60.0 / eps;
    // integrate e^{-eps (u - L)} u^r / L^r and restore the scale afterwards
    auto integrand = [&](double u) {
      return std::exp(-eps * (u - log_x) + growth_r * (std::log(u) - std::log(log_x)));
    };
    const double scaled = numerics::adaptive_gauss_legendre(integrand, log_x, upper, 1e-10, 0.0);
    integral = scaled * std::exp(-eps * log_x) * std::pow(log_x, growth_r);
  }
  const double abs_s = std::abs(s.s());
  return fx * std::pow(big_x, -s.sigma) +
         abs_s * fx / big_x * std::pow(log_x, -growth_r) * integral;
}

ZetaValue ZetaEvaluator::dirichlet(ComplexPoint s) const {
  require_half_plane(s, "zeta_dirichlet");
  const std::complex<double> value = mellin_stieltjes(counts_.N, s.s());
  double tail = 0.0;
  if (system_.is_complete()) {
    double full = 1.0;
    for (double q : system_.primes()) full /= (1.0 - std::pow(q, -s.sigma));
    const double partial = mellin_stieltjes(counts_.N, {s.sigma, 0.0}).real();
    tail = std::max(0.0, full - partial) + 1e-14 * full;
  } else {
    tail = envelope_tail(counts_.N, n_growth_r_, s);
  }
  return {value, tail};
}

std::complex<double> ZetaEvaluator::euler(ComplexPoint s) const { return zeta_euler(system_, s, x_max_); }

ZetaValue ZetaEvaluator::log_derivative(ComplexPoint s) const {
  require_half_plane(s, "zeta_log_derivative");
  const std::complex<double> value = mellin_stieltjes(counts_.psi, s.s());
  double tail = 0.0;
  if (system_.is_complete()) {
    for (double q : system_.primes()) {
      const double lq = std::log(q);
      const double first_k = std::floor(std::log(x_max_) / lq + 1e-12) + 1.0;
      const double ratio = std::pow(q, -s.sigma);
      tail += lq * std::exp(-first_k * s.sigma * lq) / (1.0 - ratio);
    }
    tail *= (1.0 + 1e-12);
  } else {
    tail = envelope_tail(counts_.psi, psi_growth_r_, s);
  }
  return {value, tail};
}

ZetaValue ZetaEvaluator::g_function(ComplexPoint s, double rho) const {
  require_half_plane(s, "G_function");
  const ZetaValue zeta = dirichlet(s);
  if (std::abs(zeta.value) <= 1e-12) {
    throw SingularityError("G_function: zeta(s) vanishes within tolerance; -zeta'/zeta undefined");
  }
  const ZetaValue ld = log_derivative(s);
  const std::complex<double> z = s.s();
  return {ld.value / z - rho / (z - 1.0), ld.tail_bound / std::abs(z)};
}

ZetaValue ZetaEvaluator::b_function(ComplexPoint s, double rho) const {
  const ZetaValue zeta = dirichlet(s);
  const std::complex<double> factor = std::pow(s.s() - 1.0, rho);
  return {factor * zeta.value, std::abs(factor) * zeta.tail_bound};
}

ZetaValue zeta_dirichlet(const GeneralizedPrimeSystem& system, ComplexPoint s, double x_max) {
  require_half_plane(s, "zeta_dirichlet");
  return ZetaEvaluator(system, x_max).dirichlet(s);
}

std::complex<double> zeta_euler(const GeneralizedPrimeSystem& system, ComplexPoint s, double x_max) {
  require_half_plane(s, "zeta_euler");
  std::complex<double> product = 1.0;
  for (double q : system.primes()) {
    if (q > x_max) break;
    if (s.t == 0.0) {
      // q^sigma / (q^sigma - 1) keeps small integer cases exact
      const double p = std::pow(q, s.sigma);
      if (!(p > 1.0)) throw DomainError("zeta_euler: Euler factor with |q^{-s}| >= 1");
      if (std::isfinite(p)) product *= p / (p - 1.0);
      continue;
    }
    const std::complex<double> z = std::exp(-s.s() * std::log(q));
    if (std::abs(z) >= 1.0) throw DomainError("zeta_euler: Euler factor with |q^{-s}| >= 1");
    product /= (1.0 - z);
  }
  return product;
}

ZetaValue zeta_log_derivative(const GeneralizedPrimeSystem& system, ComplexPoint s, double x_max) {
  require_half_plane(s, "zeta_log_derivative");
  return ZetaEvaluator(system, x_max).log_derivative(s);
}

ZetaValue g_function(const GeneralizedPrimeSystem& system, ComplexPoint s, double rho, double x_max) {
  require_half_plane(s, "G_function");
  return ZetaEvaluator(system, x_max).g_function(s, rho);
}

// ---------------------------------------------------------------------------

SingularValue singular_model_eval(const ZetaSingularModel& model, ComplexPoint s) {
  const std::complex<double> w = s.s() - 1.0;
  if (w == std::complex<double>(0.0, 0.0)) {
    throw SingularityError("singular_model_eval: s = 1 is the pole of the singular model");
  }
  const std::complex<double> log_w = std::log(w);
  std::complex<double> singular = model.c * std::exp(-model.rho * log_w);
  std::complex<double> d = model.c;
  for (const auto& block : model.blocks) {
    if (!block.coefficients_known) {
      throw DomainError("singular_model_eval: block polynomial coefficients are unknown "
                        "(only the degree was transferred from the N-model)");
    }
    std::complex<double> p = 0.0;
    for (auto it = block.poly.rbegin(); it != block.poly.rend(); ++it) p = p * log_w + *it;
    singular += p * std::exp(-block.rho * log_w);
    d += p * std::exp((model.rho - block.rho) * log_w);
  }
  return {singular, d};
}

std::vector<FResidualRow> f_residual(const ZetaEvaluator& zeta, const ZetaSingularModel& model,
                                     const std::vector<ComplexPoint>& grid, double dt) {
  auto residual = [&](ComplexPoint p) {
    std::complex<double> f = zeta.dirichlet(p).value;
    if (!model.empty()) f -= singular_model_eval(model, p).singular;
    return f;
  };
  std::vector<FResidualRow> rows;
  rows.reserve(grid.size());
  for (const ComplexPoint& p : grid) {
    const ZetaValue z = zeta.dirichlet(p);
    FResidualRow row;
    row.point = p;
    row.f = model.empty() ? z.value : z.value - singular_model_eval(model, p).singular;
    const std::complex<double> up = residual({p.sigma, p.t + dt});
    const std::complex<double> down = residual({p.sigma, p.t - dt});
    const std::complex<double> d_dt = (up - down) / (2.0 * dt);
    row.f_prime = std::complex<double>(0.0, -1.0) * d_dt;
    row.tail_bound = z.tail_bound;
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------

const char* to_string(BoundaryClass c) {
  switch (c) {
    case BoundaryClass::pseudofunction_like: return "pseudofunction-like";
    case BoundaryClass::pseudomeasure_like: return "pseudomeasure-like";
    case BoundaryClass::growing: return "growing";
  }
  return "pseudomeasure-like";
}

namespace {

std::size_t next_pow2(double x) {
  std::size_t n = 1;
  while (static_cast<double>(n) < x) n <<= 1;
  return n;
}

}  // namespace

BoundaryProbeReport boundary_probe(const AnalyticSupplier& f, const BoundaryProbeOptions& options) {
  if (options.sigma_ladder.empty() || options.h_grid.empty()) {
    throw DomainError("boundary_probe: sigma ladder and h grid must be non-empty");
  }
  for (std::size_t i = 0; i < options.sigma_ladder.size(); ++i) {
    if (!(options.sigma_ladder[i] > 1.0)) throw DomainError("boundary_probe: every sigma must exceed 1");
    if (i > 0 && !(options.sigma_ladder[i] < options.sigma_ladder[i - 1])) {
      throw DomainError("boundary_probe: sigma ladder must be strictly decreasing");
    }
  }
  const double w = options.half_width;
  if (!(w > 0.0)) throw DomainError("boundary_probe: window half-width must be positive");

  BoundaryProbeReport report;
  report.sigma_ladder = options.sigma_ladder;
  report.h_grid = options.h_grid;
  report.options = options;
  {
    std::ostringstream os;
    os.precision(12);
    os << "cos^2(pi t/(2w))/w on [-w,w], w=" << w;
    report.window = os.str();
  }

  double h_abs_max = 0.0;
  std::size_t h_end = 0;
  for (std::size_t j = 0; j < options.h_grid.size(); ++j) {
    if (std::abs(options.h_grid[j]) > h_abs_max) {
      h_abs_max = std::abs(options.h_grid[j]);
      h_end = j;
    }
  }
  const auto window = [w](double t) {
    const double c = std::cos(std::numbers::pi * t / (2.0 * w));
    return c * c / w;
  };

  for (double sigma : options.sigma_ladder) {
    std::size_t panels = next_pow2(std::max({256.0, 128.0 * w / (sigma - 1.0), 32.0 * h_abs_max * w}));
    // samples g(t_i) = f(sigma + i t_i) phi(t_i), refined by filling midpoints
    std::vector<std::complex<double>> g(panels + 1);
    auto t_at = [&](std::size_t i, std::size_t m) {
      return -w + 2.0 * w * static_cast<double>(i) / static_cast<double>(m);
    };
    for (std::size_t i = 0; i <= panels; ++i) {
      const double t = t_at(i, panels);
      const double phi = window(t);
      g[i] = phi == 0.0 ? 0.0 : f({sigma, t}) * phi;
    }
    auto coefficients = [&](std::size_t m, std::vector<std::complex<double>>& out, double& norm) {
      const double step = 2.0 * w / static_cast<double>(m);
      out.assign(options.h_grid.size(), 0.0);
      std::vector<double> mags(m + 1);
      for (std::size_t i = 0; i <= m; ++i) mags[i] = std::abs(g[i]);
      norm = numerics::simpson<double>(mags, step);
      std::vector<std::complex<double>> terms(m + 1);
      for (std::size_t j = 0; j < options.h_grid.size(); ++j) {
        const double h = options.h_grid[j];
        for (std::size_t i = 0; i <= m; ++i) {
          terms[i] = g[i] * std::polar(1.0, h * t_at(i, m));
        }
        out[j] = numerics::simpson<std::complex<double>>(terms, step);
      }
    };

    std::vector<std::complex<double>> current;
    double norm = 0.0;
    coefficients(panels, current, norm);
    bool settled = false;
    for (int level = 0; level < options.max_refinements; ++level) {
      const std::size_t finer = panels * 2;
      std::vector<std::complex<double>> refined(finer + 1);
      for (std::size_t i = 0; i <= panels; ++i) refined[2 * i] = g[i];
      for (std::size_t i = 1; i < finer; i += 2) {
        const double t = t_at(i, finer);
        refined[i] = f({sigma, t}) * window(t);
      }
      g = std::move(refined);
      panels = finer;
      std::vector<std::complex<double>> next;
      double next_norm = 0.0;
      coefficients(panels, next, next_norm);
      double diff = 0.0;
      double scale = next_norm;
      for (std::size_t j = 0; j < next.size(); ++j) {
        diff = std::max(diff, std::abs(next[j] - current[j]));
        scale = std::max(scale, std::abs(next[j]));
      }
      current = std::move(next);
      norm = next_norm;
      if (diff <= options.rel_tol * scale) {
        settled = true;
        break;
      }
    }
    if (!settled) {
      std::ostringstream os;
      os << "boundary_probe: quadrature did not settle to relative " << options.rel_tol
         << " after " << options.max_refinements << " refinements at sigma = " << sigma
         << " (unreliable probe, not classified)";
      throw ReliabilityError(os.str());
    }
    for (const auto& c : current) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw ReliabilityError("boundary_probe: non-finite windowed coefficient");
      }
    }
    double m = 0.0;
    for (const auto& c : current) m = std::max(m, std::abs(c));
    report.max_abs.push_back(m);
    report.end_abs.push_back(std::abs(current[h_end]));
    report.coefficients.push_back(std::move(current));
  }

  report.classification = BoundaryClass::pseudomeasure_like;
  bool growing = false;
  for (std::size_t i = 1; i < report.max_abs.size(); ++i) {
    if (report.max_abs[i] > options.growth_factor * report.max_abs[i - 1]) growing = true;
  }
  if (growing) {
    report.classification = BoundaryClass::growing;
  } else if (report.end_abs.back() <= options.decay_fraction * report.max_abs.back()) {
    report.classification = BoundaryClass::pseudofunction_like;
  }
  return report;
}

}  // namespace beurling
