#pragma once

#include <string>
#include <vector>

namespace beurling {

/// a_nu cos(theta_nu log x) inside the main term.
struct OscillatoryTerm {
  double amplitude = 0.0;
  double theta = 0.0;
};

/// P(log log x) cos(theta log x); polynomial coefficients in ascending degree.
struct PolynomialMode {
  std::vector<double> poly;
  double theta = 0.0;
};

/// x log^{r_j} x * sum of polynomial modes.
struct LowerBlock {
  double r = 0.0;
  std::vector<PolynomialMode> modes;
};

/// Main-term model for N(x), x > e:
///   x (a + sum a_nu cos(theta_nu log x)) log^r x
///     + x sum_j log^{r_j} x sum_nu P_{nu,j}(log log x) cos(theta_{nu,j} log x)
struct DecompositionModel {
  double a = 1.0;
  double r = 0.0;
  std::vector<OscillatoryTerm> main_osc;
  std::vector<LowerBlock> blocks;

  /// a > 0, r > -1, r > r_1 > ... > r_k, theta_nu != 0. Throws DomainError.
  void validate() const;
};

/// P_j(log(s-1)) / (s-1)^{rho_j}. When the block comes from a transferred
/// N-model only the degree is known and `coefficients_known` is false.
struct SingularBlock {
  double rho = 0.0;
  std::vector<double> poly;
  int degree = 0;
  bool coefficients_known = true;
};

/// Singular part of zeta near s = 1:
///   c / (s-1)^rho + sum_j P_j(log(s-1)) / (s-1)^{rho_j}.
/// The default value (c = 0, no blocks) stands for "no singular part".
struct ZetaSingularModel {
  double c = 0.0;
  double rho = 0.0;
  std::vector<SingularBlock> blocks;

  bool empty() const { return c == 0.0 && blocks.empty(); }
  /// c > 0, rho > 0, rho > rho_1 > ... > rho_k. Throws DomainError.
  void validate() const;
};

}  // namespace beurling
