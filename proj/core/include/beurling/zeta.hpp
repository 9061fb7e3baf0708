#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "beurling/models.hpp"
#include "beurling/number_system.hpp"

namespace beurling {

/// s = sigma + i t.
struct ComplexPoint {
  double sigma = 2.0;
  double t = 0.0;

  std::complex<double> s() const { return {sigma, t}; }
};

/// A truncated evaluation together with a bound on what the truncation left
/// out. For systems whose prime list is complete the bound is rigorous; for
/// systems complete only up to x_max it rests on a growth envelope for the
/// counting function beyond x_max (see ZetaEvaluator).
struct ZetaValue {
  std::complex<double> value;
  double tail_bound = 0.0;
};

/// Evaluates zeta and its relatives for one system at a fixed truncation.
///
/// The counting functions are enumerated once at construction, so repeated
/// evaluations on a grid cost one Stieltjes sum each.
///
/// Tail bounds. Complete systems: the omitted Dirichlet terms are bounded by
/// sum_{n > X} n^{-sigma} = prod_q (1 - q^{-sigma})^{-1} - sum_{n <= X} n^{-sigma},
/// and the omitted psi terms by the geometric remainders
/// sum_q log q q^{-k_q sigma} / (1 - q^{-sigma}). Otherwise F(x) <= F(X)
/// (x/X) (log x / log X)^r for x > X, with r = max(model r, 0) when a model is
/// supplied and the observed growth exponent of F (floored at 0) otherwise,
/// which after partial summation gives
///   |tail| <= F(X) X^{-sigma} + |s| F(X) X^{-1} log^{-r} X int_{log X}^inf e^{-(sigma-1)u} u^r du.
class ZetaEvaluator {
 public:
  ZetaEvaluator(const GeneralizedPrimeSystem& system, double x_max,
                std::optional<DecompositionModel> model = std::nullopt);

  const GeneralizedPrimeSystem& system() const { return system_; }
  double x_max() const { return x_max_; }
  const StepFunction& N() const { return counts_.N; }
  const StepFunction& psi() const { return counts_.psi; }

  /// sum_{n <= x_max} n^{-s}.
  ZetaValue dirichlet(ComplexPoint s) const;
  /// prod_{q <= x_max} (1 - q^{-s})^{-1}.
  std::complex<double> euler(ComplexPoint s) const;
  /// sum_{q^k <= x_max} log q q^{-ks}, the psi Stieltjes sum (-zeta'/zeta).
  ZetaValue log_derivative(ComplexPoint s) const;
  /// -zeta'(s)/(s zeta(s)) - rho/(s-1).
  ZetaValue g_function(ComplexPoint s, double rho) const;
  /// (s-1)^rho zeta(s).
  ZetaValue b_function(ComplexPoint s, double rho) const;

 private:
  double envelope_tail(const StepFunction& f, double growth_r, ComplexPoint s) const;

  GeneralizedPrimeSystem system_;
  double x_max_;
  CountingFunctions counts_;
  double n_growth_r_ = 0.0;
  double psi_growth_r_ = 0.0;
};

ZetaValue zeta_dirichlet(const GeneralizedPrimeSystem& system, ComplexPoint s, double x_max);
std::complex<double> zeta_euler(const GeneralizedPrimeSystem& system, ComplexPoint s, double x_max);
ZetaValue zeta_log_derivative(const GeneralizedPrimeSystem& system, ComplexPoint s, double x_max);
ZetaValue g_function(const GeneralizedPrimeSystem& system, ComplexPoint s, double rho, double x_max);

/// Singular part and D(s) = (s-1)^rho * (singular part), principal branches.
struct SingularValue {
  std::complex<double> singular;
  std::complex<double> d;
};

SingularValue singular_model_eval(const ZetaSingularModel& model, ComplexPoint s);

struct FResidualRow {
  ComplexPoint point;
  std::complex<double> f;
  /// F'(s) = -i dF/dt by a centred difference in t.
  std::complex<double> f_prime;
  double tail_bound = 0.0;
};

/// F(s) = zeta(s) - singular part on a grid in the half-plane sigma > 1.
std::vector<FResidualRow> f_residual(const ZetaEvaluator& zeta, const ZetaSingularModel& model,
                                     const std::vector<ComplexPoint>& grid, double dt = 1e-4);

// ---------------------------------------------------------------------------
// boundary behaviour probe

enum class BoundaryClass { pseudofunction_like, pseudomeasure_like, growing };

const char* to_string(BoundaryClass c);

struct BoundaryProbeOptions {
  std::vector<double> sigma_ladder{1.5, 1.25, 1.1, 1.05};
  std::vector<double> h_grid{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  /// Window phi(t) = cos^2(pi t / (2w)) / w on I = [-w, w].
  double half_width = 1.0;
  double rel_tol = 1e-8;
  int max_refinements = 2;
  /// "growing" if max_h |c| grows by more than this factor between steps.
  double growth_factor = 2.0;
  /// "pseudofunction-like" if |c(sigma_min, h_max)| <= this * max_h |c|.
  double decay_fraction = 0.1;
};

struct BoundaryProbeReport {
  std::vector<double> sigma_ladder;
  std::vector<double> h_grid;
  /// coefficients[i][j] = c(sigma_i, h_j) = int_I f(sigma_i + it) e^{i h_j t} phi(t) dt
  std::vector<std::vector<std::complex<double>>> coefficients;
  std::vector<double> max_abs;  // M(sigma)
  std::vector<double> end_abs;  // D(sigma) = |c(sigma, h_max)|
  BoundaryClass classification = BoundaryClass::pseudomeasure_like;
  std::string window;
  BoundaryProbeOptions options;
};

using AnalyticSupplier = std::function<std::complex<double>(ComplexPoint)>;

/// Windowed Fourier coefficients of f along sigma + iI for each sigma in the
/// ladder, by composite Simpson with doubling refinement. Throws
/// ReliabilityError if the quadrature has not settled after
/// `max_refinements` doublings.
BoundaryProbeReport boundary_probe(const AnalyticSupplier& f, const BoundaryProbeOptions& options = {});

}  // namespace beurling
