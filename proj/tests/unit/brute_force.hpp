#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

// Exhaustive enumeration over exponent vectors, independent of the heap.
namespace beurling::testing_oracles {

inline void brute_force_recurse(const std::vector<double>& primes, std::size_t i, double value, double x_max,
                                std::vector<double>& out) {
  if (i == primes.size()) {
    out.push_back(value);
    return;
  }
  for (double v = value; v <= x_max * (1.0 + 1e-13); v *= primes[i]) brute_force_recurse(primes, i + 1, v, x_max, out);
}

inline std::vector<double> brute_force_integers(const std::vector<double>& primes, double x_max) {
  std::vector<double> out;
  brute_force_recurse(primes, 0, 1.0, x_max, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline double count_at_most(const std::vector<double>& sorted, double x) {
  return static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), x * (1.0 + 1e-12)) - sorted.begin());
}

}  // namespace beurling::testing_oracles
