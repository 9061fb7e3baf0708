#pragma once

#include <map>
#include <string>
#include <vector>

#include "beurling/number_system.hpp"

namespace beurling {

/// Behaviour tags. The vocabulary is fixed: chebyshev-holds, chebyshev-fails,
/// pole-free, finite, qualitative-only, oscillatory.
const std::vector<std::string>& gallery_tag_vocabulary();

struct GalleryEntry {
  std::string key;
  std::string description;
  std::vector<std::string> tags;
  /// Builder parameters and their defaults.
  std::map<std::string, double> parameters;
};

const std::vector<GalleryEntry>& gallery_entries();

/// Throws DomainError naming the available keys when `key` is unknown.
const GalleryEntry& gallery_entry(const std::string& key);

/// Builds a gallery system. `parameters` overrides the entry defaults
/// (q for geometric-q, theta for oscillatory); unknown parameter names are
/// rejected.
GeneralizedPrimeSystem builtin(const std::string& key, double x_max,
                               const std::map<std::string, double>& parameters = {});

/// Target pi(x) = int_2^x (1 - cos(theta log u)) / log u du, tabulated on
/// 10^4 log-uniform nodes over [2, x_max].
DensityTarget oscillatory_target(double theta, double x_max);

/// sample_from_density of oscillatory_target. Throws DomainError for
/// theta = 0 or x_max < 4.
GeneralizedPrimeSystem oscillatory_density(double theta, double x_max);

}  // namespace beurling
