#include "beurling/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "beurling/errors.hpp"

namespace beurling {

namespace {

bool same_location(double a, double b) {
  return std::abs(b - a) <= StepFunction::kMergeTolerance * (1.0 + std::abs(a));
}

}  // namespace

StepFunction StepFunction::from_points(std::vector<std::pair<double, double>> points) {
  std::sort(points.begin(), points.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<double> jumps;
  std::vector<double> weights;
  jumps.reserve(points.size());
  weights.reserve(points.size());
  for (const auto& [x, w] : points) {
    if (!std::isfinite(x) || !std::isfinite(w)) {
      throw DomainError("step function: non-finite jump location or weight");
    }
    if (!jumps.empty() && same_location(jumps.back(), x)) {
      weights.back() += w;
    } else {
      jumps.push_back(x);
      weights.push_back(w);
    }
  }
  // drop jumps whose merged weight vanished
  std::size_t k = 0;
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (weights[i] != 0.0) {
      jumps[k] = jumps[i];
      weights[k] = weights[i];
      ++k;
    }
  }
  jumps.resize(k);
  weights.resize(k);
  return from_sorted(std::move(jumps), std::move(weights));
}

StepFunction StepFunction::from_sorted(std::vector<double> jumps, std::vector<double> weights) {
  if (jumps.size() != weights.size()) {
    throw DomainError("step function: jumps and weights differ in length");
  }
  for (std::size_t i = 1; i < jumps.size(); ++i) {
    if (!(jumps[i] > jumps[i - 1])) {
      throw DomainError("step function: jump locations must be strictly increasing");
    }
  }
  StepFunction f;
  f.cumulative_.resize(weights.size());
  double acc = 0.0;
  double comp = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    // Neumaier summation keeps long cumulative sums (psi to 1e6) exact to ulps
    const double t = acc + weights[i];
    if (std::abs(acc) >= std::abs(weights[i])) {
      comp += (acc - t) + weights[i];
    } else {
      comp += (weights[i] - t) + acc;
    }
    acc = t;
    f.cumulative_[i] = acc + comp;
  }
  f.jumps_ = std::move(jumps);
  f.weights_ = std::move(weights);
  return f;
}

double StepFunction::operator()(double x) const {
  const auto it = std::upper_bound(jumps_.begin(), jumps_.end(), x);
  const auto idx = static_cast<std::size_t>(it - jumps_.begin());
  return idx == 0 ? 0.0 : cumulative_[idx - 1];
}

double StepFunction::left_limit(double x) const {
  const auto it = std::lower_bound(jumps_.begin(), jumps_.end(), x);
  const auto idx = static_cast<std::size_t>(it - jumps_.begin());
  return idx == 0 ? 0.0 : cumulative_[idx - 1];
}

StepFunction StepFunction::truncated(double x_max) const {
  const auto it = std::upper_bound(jumps_.begin(), jumps_.end(), x_max);
  const auto n = static_cast<std::size_t>(it - jumps_.begin());
  StepFunction f;
  f.jumps_.assign(jumps_.begin(), jumps_.begin() + static_cast<std::ptrdiff_t>(n));
  f.weights_.assign(weights_.begin(), weights_.begin() + static_cast<std::ptrdiff_t>(n));
  f.cumulative_.assign(cumulative_.begin(), cumulative_.begin() + static_cast<std::ptrdiff_t>(n));
  return f;
}

StepFunction StepFunction::log_scale() const {
  std::vector<double> jumps;
  jumps.reserve(jumps_.size());
  for (double u : jumps_) {
    if (!(u > 0.0)) throw DomainError("step function: log scale needs positive jump locations");
    jumps.push_back(std::log(u));
  }
  StepFunction f;
  f.jumps_ = std::move(jumps);
  f.weights_ = weights_;
  f.cumulative_ = cumulative_;
  return f;
}

std::complex<double> mellin_stieltjes(const StepFunction& f, std::complex<double> s) {
  const auto jumps = f.jumps();
  const auto weights = f.weights();
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    const double lu = std::log(jumps[i]);
    const double mag = weights[i] * std::exp(-s.real() * lu);
    const double phase = -s.imag() * lu;
    re += mag * std::cos(phase);
    im += mag * std::sin(phase);
  }
  return {re, im};
}

}  // namespace beurling
