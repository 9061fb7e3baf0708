#include "beurling/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "beurling/errors.hpp"
#include "beurling/numerics.hpp"

namespace beurling {

const std::vector<std::string>& gallery_tag_vocabulary() {
  static const std::vector<std::string> tags{"chebyshev-holds", "chebyshev-fails", "pole-free",
                                             "finite",          "qualitative-only", "oscillatory"};
  return tags;
}

const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries{
      {"classical", "rational primes by sieve", {"chebyshev-holds"}, {}},
      {"two-prime", "primes {2, 3}", {"chebyshev-fails", "finite", "pole-free"}, {}},
      {"geometric-q", "single prime q; the integers are its powers", {"chebyshev-fails", "finite", "pole-free"},
       {{"q", 2.0}}},
      {"dense-linear", "sampled from pi(x) = x - 1, primes 2, 3, 4, ...", {"chebyshev-fails"}, {}},
      {"oscillatory", "sampled from pi(x) = int_2^x (1 - cos(theta log u))/log u du",
       {"oscillatory", "qualitative-only"}, {{"theta", 1.0}}},
  };
  return entries;
}

const GalleryEntry& gallery_entry(const std::string& key) {
  for (const auto& entry : gallery_entries()) {
    if (entry.key == key) return entry;
  }
  std::ostringstream os;
  os << "unknown gallery key '" << key << "'; available:";
  for (const auto& entry : gallery_entries()) os << ' ' << entry.key;
  throw DomainError(os.str());
}

GeneralizedPrimeSystem builtin(const std::string& key, double x_max,
                               const std::map<std::string, double>& parameters) {
  const GalleryEntry& entry = gallery_entry(key);
  std::map<std::string, double> params = entry.parameters;
  for (const auto& [name, value] : parameters) {
    if (!params.contains(name)) {
      throw DomainError("gallery entry '" + key + "' has no parameter '" + name + "'");
    }
    params[name] = value;
  }
  if (key == "classical") return sieve_classical(x_max);
  if (key == "two-prime") return from_explicit_primes({2.0, 3.0}, "two-prime");
  if (key == "geometric-q") {
    const double q = params.at("q");
    if (!(q > 1.0)) throw DomainError("geometric-q: q must exceed 1");
    return from_explicit_primes({q}, "geometric-q");
  }
  if (key == "dense-linear") {
    if (!(x_max >= 1.0)) throw DomainError("dense-linear: x_max must be >= 1");
    return sample_from_density(
        DensityTarget::function([](double x) { return std::max(0.0, x - 1.0); }, "x - 1"), x_max,
        "dense-linear");
  }
  return oscillatory_density(params.at("theta"), x_max);
}

DensityTarget oscillatory_target(double theta, double x_max) {
  constexpr std::size_t kNodes = 10000;
  if (theta == 0.0 || !std::isfinite(theta)) {
    throw DomainError("oscillatory_density: theta must be non-zero (theta = 0 is the classical-like density)");
  }
  if (!(x_max >= 4.0)) throw DomainError("oscillatory_density: x_max must be >= 4");
  const auto nodes = numerics::geomspace(2.0, x_max, kNodes);
  auto density = [theta](double u) {
    const double l = std::log(u);
    return (1.0 - std::cos(theta * l)) / l;
  };
  std::vector<double> values(kNodes, 0.0);
  for (std::size_t i = 1; i < kNodes; ++i) {
    values[i] = values[i - 1] + numerics::gauss_legendre8(density, nodes[i - 1], nodes[i]);
  }
  std::ostringstream label;
  label.precision(12);
  label << "int_2^x (1 - cos(" << theta << " log u))/log u du";
  return DensityTarget::table(nodes, std::move(values), label.str());
}

GeneralizedPrimeSystem oscillatory_density(double theta, double x_max) {
  return sample_from_density(oscillatory_target(theta, x_max), x_max, "oscillatory");
}

}  // namespace beurling
