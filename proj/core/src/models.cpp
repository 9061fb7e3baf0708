#include "beurling/models.hpp"

#include <cmath>
#include <sstream>

#include "beurling/errors.hpp"

namespace beurling {

void DecompositionModel::validate() const {
  if (!(a > 0.0)) throw DomainError("decomposition model: a must be positive");
  if (!(r > -1.0)) throw DomainError("decomposition model: r must exceed -1");
  for (const auto& term : main_osc) {
    if (!std::isfinite(term.amplitude)) throw DomainError("decomposition model: non-finite amplitude");
    if (term.theta == 0.0 || !std::isfinite(term.theta)) {
      throw DomainError("decomposition model: oscillation frequency theta must be finite and non-zero");
    }
  }
  double previous = r;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (!(blocks[j].r < previous)) {
      std::ostringstream os;
      os << "decomposition model: block exponents must decrease strictly below r (block " << j
         << " has r_j = " << blocks[j].r << ")";
      throw DomainError(os.str());
    }
    previous = blocks[j].r;
  }
}

void ZetaSingularModel::validate() const {
  if (!(c > 0.0)) throw DomainError("singular model: c must be positive");
  if (!(rho > 0.0)) throw DomainError("singular model: rho must be positive");
  double previous = rho;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (!(blocks[j].rho < previous)) {
      std::ostringstream os;
      os << "singular model: block exponents must decrease strictly below rho (block " << j
         << " has rho_j = " << blocks[j].rho << ")";
      throw DomainError(os.str());
    }
    previous = blocks[j].rho;
  }
}

}  // namespace beurling
