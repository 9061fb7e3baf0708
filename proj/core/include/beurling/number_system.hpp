#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beurling/step_function.hpp"

namespace beurling {

enum class SystemSource { explicit_list, sieve, density_sampled };

const char* to_string(SystemSource source);
SystemSource parse_system_source(const std::string& text);

/// A discrete Beurling generalized prime system: a finite, sorted multiset
/// of real primes q > 1, complete (all primes of the system listed) up to
/// x_max_supported.
class GeneralizedPrimeSystem {
 public:
  GeneralizedPrimeSystem() = default;
  /// Sorts the values; throws DomainError if any value is <= 1 or not finite.
  GeneralizedPrimeSystem(std::vector<double> primes, std::string name, SystemSource source,
                         double x_max_supported);

  std::span<const double> primes() const { return primes_; }
  const std::string& name() const { return name_; }
  SystemSource source() const { return source_; }
  double x_max_supported() const { return x_max_supported_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }

  /// True when the list holds every prime of the system (no upper cutoff).
  bool is_complete() const { return x_max_supported_ == std::numeric_limits<double>::infinity(); }

  /// Throws CompletenessError if x_max exceeds the supported range.
  void require_supported(double x_max, const char* what) const;

 private:
  std::vector<double> primes_;
  std::string name_;
  SystemSource source_ = SystemSource::explicit_list;
  double x_max_supported_ = std::numeric_limits<double>::infinity();
};

GeneralizedPrimeSystem from_explicit_primes(std::vector<double> values, std::string name);

/// Rational primes <= x_max by the sieve of Eratosthenes.
GeneralizedPrimeSystem sieve_classical(double x_max);

/// Monotone target for the prime counting function, either a callable or a
/// piecewise-linear table.
class DensityTarget {
 public:
  using Fn = std::function<double(double)>;

  static DensityTarget function(Fn fn, std::string label);
  /// Table of (x, target) nodes, x strictly increasing; linear interpolation
  /// between nodes, 0 left of the first node, constant right of the last.
  /// Throws DomainError on a decreasing table.
  static DensityTarget table(std::vector<double> x, std::vector<double> value, std::string label);

  double operator()(double x) const;
  const std::string& label() const { return label_; }

 private:
  Fn fn_;
  std::string label_;
};

/// p_k = inf{x : target(x) >= k} for k = 1, 2, ... while p_k <= x_max,
/// located by bisection to 1e-9 in x.
GeneralizedPrimeSystem sample_from_density(const DensityTarget& target, double x_max,
                                           std::string name = "density");

/// A generalized integer q_1^{e_1} ... q_m^{e_m}; exponents are keyed by
/// prime index into the system's sorted prime list.
struct IntegerAtom {
  double log_value = 0.0;
  double value = 1.0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> exponents;  // (index, multiplicity), index ascending
};

/// Streams the generalized integers <= x_max in non-decreasing log_value
/// order, one atom per exponent vector, starting with the empty product.
///
/// Min-heap over the frontier of non-decreasing prime-index sequences. A
/// sequence (i_1 <= ... <= i_k) has two successors: append i_k again, or
/// replace i_k by i_k + 1. Both are >= the parent, so pops come out sorted,
/// and every multiset of indices is reached exactly once.
class IntegerEnumerator {
 public:
  IntegerEnumerator(const GeneralizedPrimeSystem& system, double x_max);

  std::optional<IntegerAtom> next();

 private:
  struct Node {
    double log_value;
    double value;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> exponents;
  };
  struct Later {
    bool operator()(const Node& a, const Node& b) const;
  };

  Node make_node(std::vector<std::pair<std::uint32_t, std::uint32_t>> exponents) const;
  void push_if_fits(std::vector<std::pair<std::uint32_t, std::uint32_t>> exponents);

  std::vector<double> primes_;
  std::vector<double> log_primes_;
  double x_max_;
  bool emitted_root_ = false;
  std::priority_queue<Node, std::vector<Node>, Later> heap_;
};

IntegerEnumerator enumerate_integers(const GeneralizedPrimeSystem& system, double x_max);

struct CountingFunctions {
  StepFunction N;
  StepFunction pi;
  StepFunction Pi;
  StepFunction psi;
};

/// N, pi, Pi and psi up to x_max.
CountingFunctions counting_functions(const GeneralizedPrimeSystem& system, double x_max);

/// N alone (the expensive part of counting_functions).
StepFunction integer_counting_function(const GeneralizedPrimeSystem& system, double x_max);

/// pi, Pi and psi only; each prime power q^k <= x_max contributes 1 (k = 1),
/// 1/k and log q respectively. N is left empty.
CountingFunctions prime_counting_functions(const GeneralizedPrimeSystem& system, double x_max);

/// S(x) = psi(e^x) for x <= x_log_max, built in the log scale directly so
/// that ranges beyond double overflow of e^x are representable.
StepFunction psi_log_scale(const GeneralizedPrimeSystem& system, double x_log_max);

}  // namespace beurling
