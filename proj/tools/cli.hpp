#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace beurling::cli {

struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 0;
  bool geometric = false;

  /// "min:max:points:lin|geo". Throws DomainError.
  static GridSpec parse(const std::string& text);
  std::vector<double> values() const;
  std::string to_string() const;
};

struct RunConfig {
  std::string subcommand;
  /// Path to a system file, or a gallery key.
  std::string system = "two-prime";
  std::map<std::string, double> system_params;
  std::optional<GridSpec> grid;
  /// "<sigmas>@<ts>", each side a comma list or min:max:points.
  std::string s_grid = "2@0";
  std::vector<double> sigma_ladder{1.5, 1.25, 1.1, 1.05};
  std::vector<double> h_grid{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  double half_width = 1.0;
  int n = 8;
  double delta = 0.25;
  std::string model_path;
  std::string out_path;
  std::string mode;
  /// Explicit data range; when absent each subcommand picks one and the
  /// header records it.
  std::optional<double> x_max;
  double rho = 0.0;
  double a = 1.0;
  bool header = true;
  bool timestamp = true;
  std::uint64_t seed = 0;
};

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"gen",        "count",          "zeta",     "decompose",
                                              "chebyshev",  "probe-boundary", "probe-wi", "profile"};
  return names;
}

/// Parses argv; on --help or a parse error prints to `out`/`err` and returns
/// std::nullopt with `exit_code` set.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code);

/// Runs one subcommand. The artifact goes to config.out_path, or to `out`
/// when no path is set. Errors are reported on `err`. Returns the exit
/// status: 0 success, 2 input or domain error, 3 unreliable diagnostic,
/// 4 truncation budget exceeded.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace beurling::cli
