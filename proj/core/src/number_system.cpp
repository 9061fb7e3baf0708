#include "beurling/number_system.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "beurling/errors.hpp"

namespace beurling {

const char* to_string(SystemSource source) {
  switch (source) {
    case SystemSource::explicit_list: return "explicit";
    case SystemSource::sieve: return "sieve";
    case SystemSource::density_sampled: return "density";
  }
  return "explicit";
}

SystemSource parse_system_source(const std::string& text) {
  if (text == "explicit") return SystemSource::explicit_list;
  if (text == "sieve") return SystemSource::sieve;
  if (text == "density" || text == "density-sampled") return SystemSource::density_sampled;
  throw DomainError("unknown system source '" + text + "' (expected explicit, sieve or density)");
}

GeneralizedPrimeSystem::GeneralizedPrimeSystem(std::vector<double> primes, std::string name,
                                               SystemSource source, double x_max_supported)
    : primes_(std::move(primes)),
      name_(std::move(name)),
      source_(source),
      x_max_supported_(x_max_supported) {
  for (double q : primes_) {
    if (!(q > 1.0) || !std::isfinite(q)) {
      std::ostringstream os;
      os.precision(17);
      os << "generalized prime " << q << " is not a finite value > 1";
      throw DomainError(os.str());
    }
  }
  std::sort(primes_.begin(), primes_.end());
  if (!(x_max_supported_ >= 1.0)) throw DomainError("x_max_supported must be >= 1");
}

void GeneralizedPrimeSystem::require_supported(double x_max, const char* what) const {
  // allow for the round trip through log/exp of a range given in the log scale
  if (x_max > x_max_supported_ * (1.0 + 1e-12)) {
    std::ostringstream os;
    os.precision(12);
    os << what << ": x_max = " << x_max << " exceeds the range on which system '" << name_
       << "' is complete (" << x_max_supported_ << "); results would undercount";
    throw CompletenessError(os.str());
  }
}

GeneralizedPrimeSystem from_explicit_primes(std::vector<double> values, std::string name) {
  return GeneralizedPrimeSystem(std::move(values), std::move(name), SystemSource::explicit_list,
                                std::numeric_limits<double>::infinity());
}

GeneralizedPrimeSystem sieve_classical(double x_max) {
  if (!(x_max >= 2.0)) throw DomainError("sieve_classical: x_max must be >= 2 (empty system)");
  if (x_max > 4e9) throw DomainError("sieve_classical: x_max beyond desk scale (4e9)");
  const auto limit = static_cast<std::size_t>(std::floor(x_max));
  std::vector<bool> composite(limit + 1, false);
  std::vector<double> primes;
  for (std::size_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<double>(p));
    for (std::size_t m = p * p; m <= limit; m += p) composite[m] = true;
  }
  return GeneralizedPrimeSystem(std::move(primes), "classical", SystemSource::sieve, x_max);
}

// ---------------------------------------------------------------------------
// density sampling

DensityTarget DensityTarget::function(Fn fn, std::string label) {
  DensityTarget t;
  t.fn_ = std::move(fn);
  t.label_ = std::move(label);
  return t;
}

DensityTarget DensityTarget::table(std::vector<double> x, std::vector<double> value,
                                   std::string label) {
  if (x.size() != value.size() || x.empty()) {
    throw DomainError("density table: x and value must be non-empty and of equal length");
  }
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw DomainError("density table: x nodes must be strictly increasing");
    if (value[i] < value[i - 1]) {
      std::ostringstream os;
      os << "density table is not monotone at x = " << x[i];
      throw DomainError(os.str());
    }
  }
  DensityTarget t;
  t.label_ = std::move(label);
  t.fn_ = [xs = std::move(x), vs = std::move(value)](double u) {
    if (u < xs.front()) return 0.0;
    if (u >= xs.back()) return vs.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), u);
    const auto i = static_cast<std::size_t>(it - xs.begin());
    const double w = (u - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return vs[i - 1] + w * (vs[i] - vs[i - 1]);
  };
  return t;
}

double DensityTarget::operator()(double x) const { return fn_(x); }

GeneralizedPrimeSystem sample_from_density(const DensityTarget& target, double x_max,
                                           std::string name) {
  constexpr double kTolerance = 1e-9;
  if (!(x_max >= 1.0)) throw DomainError("sample_from_density: x_max must be >= 1");
  if (std::abs(target(1.0)) > 1e-12) throw DomainError("sample_from_density: target(1) must be 0");

  const double top = target(x_max);
  std::vector<double> primes;
  double lo = 1.0;
  double previous = 0.0;
  for (long k = 1; static_cast<double>(k) <= top; ++k) {
    const double level = static_cast<double>(k);
    // invariant: target(lo) < level <= target(hi)
    double hi = x_max;
    while (hi - lo > kTolerance) {
      const double mid = 0.5 * (lo + hi);
      const double v = target(mid);
      if (v < previous - 1e-12) {
        throw DomainError("sample_from_density: target is not monotone");
      }
      if (v >= level) {
        hi = mid;
      } else {
        lo = mid;
        previous = v;
      }
    }
    primes.push_back(hi);
    // the next level is at least as far right
  }
  return GeneralizedPrimeSystem(std::move(primes), std::move(name), SystemSource::density_sampled,
                                x_max);
}

// ---------------------------------------------------------------------------
// enumeration

bool IntegerEnumerator::Later::operator()(const Node& a, const Node& b) const {
  if (a.log_value != b.log_value) return a.log_value > b.log_value;
  if (a.value != b.value) return a.value > b.value;
  return a.exponents > b.exponents;
}

IntegerEnumerator::IntegerEnumerator(const GeneralizedPrimeSystem& system, double x_max)
    : x_max_(x_max) {
  if (!(x_max >= 1.0)) throw DomainError("enumerate_integers: x_max must be >= 1");
  system.require_supported(x_max, "enumerate_integers");
  for (double q : system.primes()) {
    if (q > x_max) break;
    primes_.push_back(q);
    log_primes_.push_back(std::log(q));
  }
}

IntegerEnumerator::Node IntegerEnumerator::make_node(
    std::vector<std::pair<std::uint32_t, std::uint32_t>> exponents) const {
  // formed freshly from the exponent vector, never incrementally
  double log_value = 0.0;
  double value = 1.0;
  for (const auto& [index, e] : exponents) {
    log_value += static_cast<double>(e) * log_primes_[index];
    value *= std::pow(primes_[index], static_cast<double>(e));
  }
  return Node{log_value, value, std::move(exponents)};
}

void IntegerEnumerator::push_if_fits(std::vector<std::pair<std::uint32_t, std::uint32_t>> exponents) {
  Node node = make_node(std::move(exponents));
  if (node.value <= x_max_) heap_.push(std::move(node));
}

std::optional<IntegerAtom> IntegerEnumerator::next() {
  if (!emitted_root_) {
    emitted_root_ = true;
    if (!primes_.empty()) push_if_fits({{0u, 1u}});
    return IntegerAtom{};
  }
  if (heap_.empty()) return std::nullopt;

  Node node = heap_.top();
  heap_.pop();

  const auto last = node.exponents.back();
  // successor 1: repeat the largest index
  {
    auto child = node.exponents;
    child.back().second += 1;
    push_if_fits(std::move(child));
  }
  // successor 2: move the last factor to the next index; primes are sorted,
  // so if this overshoots every later sibling does too
  if (last.first + 1 < primes_.size()) {
    auto sibling = node.exponents;
    if (sibling.back().second == 1) {
      sibling.pop_back();
    } else {
      sibling.back().second -= 1;
    }
    sibling.emplace_back(last.first + 1, 1u);
    push_if_fits(std::move(sibling));
  }
  return IntegerAtom{node.log_value, node.value, std::move(node.exponents)};
}

IntegerEnumerator enumerate_integers(const GeneralizedPrimeSystem& system, double x_max) {
  return IntegerEnumerator(system, x_max);
}

// ---------------------------------------------------------------------------
// counting functions

StepFunction integer_counting_function(const GeneralizedPrimeSystem& system, double x_max) {
  IntegerEnumerator it(system, x_max);
  std::vector<double> jumps;
  std::vector<double> weights;
  double group_log = 0.0;
  while (auto atom = it.next()) {
    const bool same = !jumps.empty() && std::abs(atom->log_value - group_log) <=
                                            StepFunction::kMergeTolerance *
                                                (1.0 + std::abs(group_log));
    if (same) {
      weights.back() += 1.0;
    } else {
      jumps.push_back(atom->value);
      weights.push_back(1.0);
      group_log = atom->log_value;
    }
  }
  // products and logs can disagree in the last ulp for near-ties; the merge
  // above groups by log, so re-sort defensively by location
  for (std::size_t i = 1; i < jumps.size(); ++i) {
    if (!(jumps[i] > jumps[i - 1])) {
      std::vector<std::pair<double, double>> pts;
      pts.reserve(jumps.size());
      for (std::size_t k = 0; k < jumps.size(); ++k) pts.emplace_back(jumps[k], weights[k]);
      return StepFunction::from_points(std::move(pts));
    }
  }
  return StepFunction::from_sorted(std::move(jumps), std::move(weights));
}

namespace {

template <typename Emit>
void for_each_prime_power(const GeneralizedPrimeSystem& system, double log_limit, Emit&& emit) {
  for (double q : system.primes()) {
    const double lq = std::log(q);
    if (lq > log_limit * (1.0 + 1e-15)) break;
    for (unsigned k = 1;; ++k) {
      const double lpk = static_cast<double>(k) * lq;
      if (lpk > log_limit + 1e-12 * (1.0 + std::abs(log_limit))) break;
      emit(q, lq, k, lpk);
    }
  }
}

}  // namespace

CountingFunctions prime_counting_functions(const GeneralizedPrimeSystem& system, double x_max) {
  if (!(x_max >= 1.0)) throw DomainError("counting_functions: x_max must be >= 1");
  system.require_supported(x_max, "counting_functions");
  std::vector<std::pair<double, double>> pi_pts;
  std::vector<std::pair<double, double>> Pi_pts;
  std::vector<std::pair<double, double>> psi_pts;
  for (double q : system.primes()) {
    if (q > x_max) break;
    const double lq = std::log(q);
    double power = 1.0;
    for (unsigned k = 1;; ++k) {
      power = std::pow(q, static_cast<double>(k));
      if (power > x_max) break;
      if (k == 1) pi_pts.emplace_back(power, 1.0);
      Pi_pts.emplace_back(power, 1.0 / static_cast<double>(k));
      psi_pts.emplace_back(power, lq);
    }
  }
  CountingFunctions out;
  out.pi = StepFunction::from_points(std::move(pi_pts));
  out.Pi = StepFunction::from_points(std::move(Pi_pts));
  out.psi = StepFunction::from_points(std::move(psi_pts));
  return out;
}

CountingFunctions counting_functions(const GeneralizedPrimeSystem& system, double x_max) {
  CountingFunctions out = prime_counting_functions(system, x_max);
  out.N = integer_counting_function(system, x_max);
  return out;
}

StepFunction psi_log_scale(const GeneralizedPrimeSystem& system, double x_log_max) {
  if (x_log_max < 0.0) return {};
  if (x_log_max < 700.0) system.require_supported(std::exp(x_log_max), "psi_log_scale");
  else if (!system.is_complete()) system.require_supported(HUGE_VAL, "psi_log_scale");
  std::vector<std::pair<double, double>> pts;
  for_each_prime_power(system, x_log_max,
                       [&](double, double lq, unsigned, double lpk) { pts.emplace_back(lpk, lq); });
  return StepFunction::from_points(std::move(pts));
}

}  // namespace beurling
