#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "beurling/asymptotics.hpp"
#include "beurling/errors.hpp"
#include "beurling/gallery.hpp"
#include "beurling/io.hpp"
#include "beurling/numerics.hpp"
#include "beurling/tauberian.hpp"
#include "beurling/zeta.hpp"

namespace beurling::cli {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw DomainError("not a number: '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream is(text);
  while (std::getline(is, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

// comma list, or min:max:points (linear)
std::vector<double> parse_values(const std::string& text) {
  if (text.empty()) throw DomainError("empty value list");
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw DomainError("range '" + text + "' must read min:max:points");
    const double points = parse_number(parts[2]);
    if (!(points >= 1.0) || points != std::floor(points)) throw DomainError("range '" + text + "': bad point count");
    return numerics::linspace(parse_number(parts[0]), parse_number(parts[1]), static_cast<std::size_t>(points));
  }
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_number(part));
  return out;
}

std::vector<ComplexPoint> parse_s_grid(const std::string& text) {
  const auto at = text.find('@');
  if (at == std::string::npos) throw DomainError("s-grid '" + text + "' must read <sigmas>@<ts>");
  const auto sigmas = parse_values(text.substr(0, at));
  const auto ts = parse_values(text.substr(at + 1));
  std::vector<ComplexPoint> grid;
  for (double sigma : sigmas) {
    for (double t : ts) grid.push_back({sigma, t});
  }
  return grid;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + num(values[i]);
  return out;
}

class Artifact {
 public:
  explicit Artifact(const RunConfig& config) : config_(config) {}

  void meta(const std::string& key, const std::string& value) { meta_.emplace_back(key, value); }
  void columns(const std::string& names) { body_ << names << '\n'; }
  void row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
      body_ << (first ? "" : ",") << num(v);
      first = false;
    }
    body_ << '\n';
  }
  void note(const std::string& text) { notes_ << "# " << text << '\n'; }
  void verdict(const std::string& token) { verdict_ = token; }

  std::string render() const {
    std::ostringstream os;
    if (config_.header) {
      os << "# beurling " << config_.subcommand << '\n';
      for (const auto& [key, value] : meta_) os << "# " << key << '=' << value << '\n';
      os << "# conventions=counting functions right-continuous; all quantities dimensionless; "
            "12 significant digits\n";
      if (config_.timestamp) os << "# generated=" << timestamp() << '\n';
    }
    os << body_.str() << notes_.str();
    os << "verdict=" << verdict_ << '\n';
    return os.str();
  }

  static std::string timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

 private:
  const RunConfig& config_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::ostringstream body_;
  std::ostringstream notes_;
  std::string verdict_ = "ok";
};

struct ResolvedSystem {
  GeneralizedPrimeSystem system;
  std::string origin;
};

ResolvedSystem resolve_system(const RunConfig& config, double build_x_max) {
  if (std::filesystem::is_regular_file(config.system)) {
    if (!config.system_params.empty()) throw DomainError("--param applies to gallery keys only");
    return {load_system(config.system), "file:" + config.system};
  }
  return {builtin(config.system, build_x_max, config.system_params), "gallery:" + config.system};
}

void describe_common(Artifact& artifact, const RunConfig& config, const ResolvedSystem& rs) {
  artifact.meta("system", rs.origin);
  for (const auto& [k, v] : config.system_params) artifact.meta("param." + k, num(v));
  artifact.meta("system.name", rs.system.name());
  artifact.meta("system.source", to_string(rs.system.source()));
  artifact.meta("system.primes", std::to_string(rs.system.size()));
  artifact.meta("system.x_max_supported", num(rs.system.x_max_supported()));
  artifact.meta("seed", std::to_string(config.seed));
}

const GridSpec& require_grid(const RunConfig& config) {
  if (!config.grid) throw DomainError(config.subcommand + ": --grid is required");
  return *config.grid;
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + config.out_path + "'");
  file << text;
}

// ---------------------------------------------------------------------------

std::string run_gen(const RunConfig& config) {
  const double x_max = config.x_max.value_or(1e4);
  const ResolvedSystem rs = resolve_system(config, x_max);
  nlohmann::json j = nlohmann::json::parse(system_to_json(rs.system));
  if (config.header) {
    nlohmann::json g;
    g["subcommand"] = "gen";
    g["system"] = rs.origin;
    g["x_max"] = x_max;
    for (const auto& [k, v] : config.system_params) g["param"][k] = v;
    g["seed"] = config.seed;
    if (config.timestamp) g["generated"] = Artifact::timestamp();
    j["generated_by"] = g;
  }
  return j.dump(1) + "\n";
}

std::string run_count(const RunConfig& config) {
  const GridSpec& grid = require_grid(config);
  const auto xs = grid.values();
  const double top = *std::max_element(xs.begin(), xs.end());
  const double x_max = config.x_max.value_or(top);
  const ResolvedSystem rs = resolve_system(config, x_max);
  rs.system.require_supported(top, "count");
  const CountingFunctions counts = counting_functions(rs.system, top);
  Artifact artifact(config);
  describe_common(artifact, config, rs);
  artifact.meta("grid", grid.to_string());
  artifact.columns("x,N,pi,Pi,psi");
  for (double x : xs) artifact.row({x, counts.N(x), counts.pi(x), counts.Pi(x), counts.psi(x)});
  artifact.verdict("ok");
  return artifact.render();
}

std::string run_zeta(const RunConfig& config) {
  const std::string mode = config.mode.empty() ? "dirichlet" : config.mode;
  const auto points = parse_s_grid(config.s_grid);
  const ResolvedSystem rs = resolve_system(config, config.x_max.value_or(1e6));
  const double x_max = config.x_max.value_or(rs.system.is_complete() ? 1e6 : rs.system.x_max_supported());
  std::optional<DecompositionModel> model;
  if (!config.model_path.empty()) model = load_model(config.model_path);
  const ZetaEvaluator zeta(rs.system, x_max, model);

  Artifact artifact(config);
  describe_common(artifact, config, rs);
  artifact.meta("mode", mode);
  artifact.meta("s_grid", config.s_grid);
  artifact.meta("x_max", num(x_max));
  if (mode == "G") artifact.meta("rho", num(config.rho));
  if (!config.model_path.empty()) artifact.meta("model", config.model_path);

  if (mode == "dirichlet" || mode == "logderiv" || mode == "G") {
    artifact.columns("sigma,t,re,im,tail_bound");
    for (const auto& p : points) {
      const ZetaValue v = mode == "dirichlet" ? zeta.dirichlet(p)
                          : mode == "logderiv" ? zeta.log_derivative(p)
                                               : zeta.g_function(p, config.rho);
      artifact.row({p.sigma, p.t, v.value.real(), v.value.imag(), v.tail_bound});
    }
  } else if (mode == "euler") {
    artifact.columns("sigma,t,re,im");
    for (const auto& p : points) {
      const auto v = zeta.euler(p);
      artifact.row({p.sigma, p.t, v.real(), v.imag()});
    }
  } else if (mode == "F") {
    if (!model) throw DomainError("zeta mode F needs --model");
    const ZetaSingularModel singular = n_model_to_zeta_model(*model);
    artifact.note("singular model c=" + num(singular.c) + " rho=" + num(singular.rho) + " blocks=" +
                  std::to_string(singular.blocks.size()));
    artifact.columns("sigma,t,re_F,im_F,re_dF,im_dF,tail_bound");
    for (const auto& row : f_residual(zeta, singular, points)) {
      artifact.row({row.point.sigma, row.point.t, row.f.real(), row.f.imag(), row.f_prime.real(),
                    row.f_prime.imag(), row.tail_bound});
    }
  } else {
    throw DomainError("unknown zeta mode '" + mode + "' (dirichlet, euler, logderiv, G, F)");
  }
  artifact.verdict("ok");
  return artifact.render();
}

std::string run_decompose(const RunConfig& config) {
  const GridSpec& grid = require_grid(config);
  if (!grid.geometric) throw DomainError("decompose: the grid must be geometric (geo)");
  if (config.model_path.empty()) throw DomainError("decompose: --model is required");
  const DecompositionModel model = load_model(config.model_path);
  const auto xs = grid.values();
  const double top = xs.back();
  const ResolvedSystem rs = resolve_system(config, config.x_max.value_or(top));
  rs.system.require_supported(top, "decompose");
  const StepFunction n = integer_counting_function(rs.system, top);
  const ResidualTable table = residual_E(n, model, xs);
  const AbsIntegralReport abs_report = check_E_abs_integral(table.x, table.e);
  const LogAverageReport log_report = check_E_log_average(table.x, table.e);
  const TransferReport transfer = transfer_functions_check(table.x, table.e);
  const ZetaSingularModel singular = n_model_to_zeta_model(model);

  Artifact artifact(config);
  describe_common(artifact, config, rs);
  artifact.meta("grid", grid.to_string());
  artifact.meta("model", config.model_path);
  artifact.columns("x,N,model,E,I_abs,R,f1,f2");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    artifact.row({xs[i], table.n[i], table.model[i], table.e[i], abs_report.partial[i], log_report.ratio[i],
                  transfer.f1[i], transfer.f2[i]});
  }
  for (std::size_t k = 0; k < abs_report.decades.increments.size(); ++k) {
    artifact.note("decade_end=" + num(abs_report.decades.ends[k]) + " I_increment=" +
                  num(abs_report.decades.increments[k]) + " R_max=" + num(log_report.decade_max[k]));
  }
  artifact.note("abs_integral=" + std::string(to_string(abs_report.verdict)) +
                " I_estimate=" + num(abs_report.limit_estimate));
  artifact.note("log_average=" + std::string(to_string(log_report.verdict)));
  artifact.note("f1_integral=" + std::string(to_string(transfer.f1_verdict)) +
                " f1_partial=" + num(transfer.f1_partial.back()) + " sup_abs_f2=" + num(transfer.sup_abs_f2));
  std::string blocks;
  for (const auto& b : singular.blocks) {
    blocks += " (rho_j=" + num(b.rho) + ", degree=" + std::to_string(b.degree) + ", coefficients unknown)";
  }
  artifact.note("zeta_model c=" + num(singular.c) + " rho=" + num(singular.rho) + blocks);
  artifact.verdict(std::string(to_string(abs_report.verdict)) + "/" + to_string(log_report.verdict));
  return artifact.render();
}

std::string run_chebyshev(const RunConfig& config) {
  const GridSpec& grid = require_grid(config);
  const auto xs = grid.values();
  const double top = *std::max_element(xs.begin(), xs.end());
  const ResolvedSystem rs = resolve_system(config, config.x_max.value_or(top));
  const ChebyshevReport report = chebyshev_report(rs.system, xs);
  Artifact artifact(config);
  describe_common(artifact, config, rs);
  artifact.meta("grid", grid.to_string());
  artifact.columns("x,psi_over_x,pi_log_over_x");
  for (std::size_t i = 0; i < xs.size(); ++i) artifact.row({xs[i], report.psi_ratio[i], report.pi_ratio[i]});
  artifact.note("top_half psi_over_x min=" + num(report.psi_min) + " max=" + num(report.psi_max));
  artifact.note("top_half pi_log_over_x min=" + num(report.pi_min) + " max=" + num(report.pi_max));
  artifact.verdict(to_string(report.verdict));
  return artifact.render();
}

std::string run_probe_boundary(const RunConfig& config) {
  const std::string fn = config.mode.empty() ? "G" : config.mode;
  BoundaryProbeOptions options;
  options.sigma_ladder = config.sigma_ladder;
  options.h_grid = config.h_grid;
  options.half_width = config.half_width;
  Artifact artifact(config);
  AnalyticSupplier f;
  std::optional<ZetaEvaluator> zeta;
  if (fn == "one") {
    f = [](ComplexPoint) { return std::complex<double>(1.0, 0.0); };
    artifact.meta("function", "1");
  } else if (fn == "pole") {
    f = [](ComplexPoint p) { return 1.0 / (p.s() - 1.0); };
    artifact.meta("function", "1/(s-1)");
  } else if (fn == "G" || fn == "zeta") {
    const ResolvedSystem rs = resolve_system(config, config.x_max.value_or(1e6));
    const double x_max = config.x_max.value_or(rs.system.is_complete() ? 1e12 : rs.system.x_max_supported());
    describe_common(artifact, config, rs);
    artifact.meta("function", fn == "G" ? "G(s) = -zeta'(s)/(s zeta(s)) - rho/(s-1)" : "zeta(s)");
    artifact.meta("x_max", num(x_max));
    if (fn == "G") artifact.meta("rho", num(config.rho));
    zeta.emplace(rs.system, x_max);
    const double rho = config.rho;
    if (fn == "G") {
      f = [&zeta, rho](ComplexPoint p) { return zeta->g_function(p, rho).value; };
    } else {
      f = [&zeta](ComplexPoint p) { return zeta->dirichlet(p).value; };
    }
  } else {
    throw DomainError("unknown probe function '" + fn + "' (G, zeta, one, pole)");
  }
  artifact.meta("sigma_ladder", join(options.sigma_ladder));
  artifact.meta("h_grid", join(options.h_grid));
  const BoundaryProbeReport report = boundary_probe(f, options);
  artifact.meta("window", report.window);
  artifact.columns("sigma,h,re,im,abs");
  for (std::size_t i = 0; i < report.sigma_ladder.size(); ++i) {
    for (std::size_t j = 0; j < report.h_grid.size(); ++j) {
      const auto c = report.coefficients[i][j];
      artifact.row({report.sigma_ladder[i], report.h_grid[j], c.real(), c.imag(), std::abs(c)});
    }
  }
  for (std::size_t i = 0; i < report.sigma_ladder.size(); ++i) {
    artifact.note("sigma=" + num(report.sigma_ladder[i]) + " M=" + num(report.max_abs[i]) +
                  " D=" + num(report.end_abs[i]));
  }
  artifact.note("at a single boundary point local and global pseudomeasure behaviour coincide; "
                "the classification is a finite-sigma proxy");
  artifact.verdict(to_string(report.classification));
  return artifact.render();
}

std::string run_probe_wi(const RunConfig& config) {
  const GridSpec& grid = require_grid(config);
  const auto ys = grid.values();
  const double y_max = *std::max_element(ys.begin(), ys.end());
  const ResolvedSystem rs = resolve_system(config, config.x_max.value_or(std::exp(y_max + 0.5)));
  const WienerIkeharaReport report = wiener_ikehara_probe(rs.system, config.a, config.n, ys);
  Artifact artifact(config);
  describe_common(artifact, config, rs);
  artifact.meta("grid", grid.to_string());
  artifact.meta("a", num(config.a));
  artifact.meta("n", std::to_string(config.n));
  artifact.meta("kernel", "fejer");
  artifact.meta("truncation_budget", num(kTruncationBudget));
  artifact.meta("x_data_max", num(report.x_data_max));
  artifact.columns("y,n,A,trunc_bound");
  for (const auto& row : report.rows) artifact.row({row.y, static_cast<double>(report.n), row.a_value, row.trunc_bound});
  artifact.note("max_abs_deviation=" + num(report.max_abs_deviation));
  artifact.note("lock_y=" + (report.lock_y ? num(*report.lock_y) : std::string("none")));
  artifact.note("top_half min S(y)/e^y=" + num(report.liminf_ratio));
  artifact.verdict(report.lock_y ? "lower-bound-locked" : "lower-bound-not-locked");
  return artifact.render();
}

std::string run_profile(const RunConfig& config) {
  const GridSpec& grid = require_grid(config);
  const auto xs = grid.values();
  const double top = *std::max_element(xs.begin(), xs.end());
  const std::string signal = config.mode.empty() ? "psi" : config.mode;
  Artifact artifact(config);
  XSignal s;
  if (signal == "psi") {
    const double need = top + config.delta;
    const ResolvedSystem rs = resolve_system(config, config.x_max.value_or(std::exp(need)));
    const double x_log = rs.system.is_complete() ? need : std::log(rs.system.x_max_supported());
    describe_common(artifact, config, rs);
    s = XSignal::from_steps(psi_log_scale(rs.system, x_log), x_log);
    artifact.meta("signal", "S(x) = psi(e^x)");
  } else if (signal == "exp-sin") {
    s = XSignal::from_function([](double x) { return std::exp(x) * (1.0 + std::sin(x)); });
    artifact.meta("signal", "S(x) = e^x (1 + sin x)");
  } else if (signal == "neg-exp2") {
    s = XSignal::from_function([](double x) { return -std::exp(2.0 * x); });
    artifact.meta("signal", "S(x) = -e^{2x}");
  } else {
    throw DomainError("unknown profile signal '" + signal + "' (psi, exp-sin, neg-exp2)");
  }
  artifact.meta("grid", grid.to_string());
  artifact.meta("delta", num(config.delta));
  const SlowDecreaseProfile profile = slow_decrease_profile(s, config.delta, xs);
  artifact.columns("x,eta_hat,envelope");
  for (std::size_t i = 0; i < xs.size(); ++i) artifact.row({xs[i], profile.eta_hat[i], profile.envelope[i]});
  artifact.note("segment_max=" + join(profile.segment_max));
  artifact.verdict(to_string(profile.classification));
  return artifact.render();
}

}  // namespace

// ---------------------------------------------------------------------------

GridSpec GridSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) throw DomainError("grid '" + text + "' must read min:max:points:lin|geo");
  GridSpec g;
  g.min = parse_number(parts[0]);
  g.max = parse_number(parts[1]);
  const double points = parse_number(parts[2]);
  if (!(points >= 1.0) || points != std::floor(points)) throw DomainError("grid '" + text + "': bad point count");
  g.points = static_cast<std::size_t>(points);
  if (parts[3] == "lin" || parts[3] == "linear") {
    g.geometric = false;
  } else if (parts[3] == "geo" || parts[3] == "geometric") {
    g.geometric = true;
  } else {
    throw DomainError("grid '" + text + "': spacing must be lin or geo");
  }
  if (!(g.max >= g.min)) throw DomainError("grid '" + text + "': max < min");
  if (g.geometric && !(g.min > 0.0)) throw DomainError("grid '" + text + "': geometric grid needs min > 0");
  return g;
}

std::vector<double> GridSpec::values() const {
  return geometric ? numerics::geomspace(min, max, points) : numerics::linspace(min, max, points);
}

std::string GridSpec::to_string() const {
  return num(min) + ":" + num(max) + ":" + std::to_string(points) + ":" + (geometric ? "geo" : "lin");
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code) {
  RunConfig config;
  CLI::App app{"Beurling generalized number systems: counting, zeta, asymptotic and Tauberian diagnostics"};
  app.add_option("subcommand", config.subcommand, "gen | count | zeta | decompose | chebyshev | probe-boundary | "
                                                  "probe-wi | profile")
      ->required()
      ->check(CLI::IsMember(subcommands()));
  app.add_option("--system", config.system, "system file path or gallery key")->capture_default_str();
  std::vector<std::string> params;
  app.add_option("--param", params, "gallery parameter name=value (q, theta)");
  std::string grid;
  app.add_option("--grid", grid, "min:max:points:lin|geo");
  app.add_option("--s-grid", config.s_grid, "<sigmas>@<ts>, each a comma list or min:max:points")
      ->capture_default_str();
  std::string ladder;
  std::string h_grid;
  app.add_option("--sigma-ladder", ladder, "decreasing sigmas > 1, comma separated");
  app.add_option("--h-grid", h_grid, "window frequencies, comma list or min:max:points");
  app.add_option("--half-width", config.half_width, "boundary window half-width")->capture_default_str();
  app.add_option("--n", config.n, "mollifier dilation")->capture_default_str();
  app.add_option("--delta", config.delta, "slow-decrease window width")->capture_default_str();
  app.add_option("--model", config.model_path, "decomposition model file path");
  app.add_option("--out", config.out_path, "output path (default stdout)");
  app.add_option("--mode", config.mode,
                 "zeta: dirichlet|euler|logderiv|G|F; probe-boundary: G|zeta|one|pole; profile: psi|exp-sin|neg-exp2");
  double x_max = 0.0;
  auto* x_max_opt = app.add_option("--x-max", x_max, "data range / truncation point");
  app.add_option("--rho", config.rho, "pole order subtracted in G")->capture_default_str();
  app.add_option("--a", config.a, "expected density constant for probe-wi")->capture_default_str();
  app.add_option("--seed", config.seed, "reserved; all operations are deterministic")->capture_default_str();
  bool no_header = false;
  bool no_timestamp = false;
  app.add_flag("--no-header", no_header, "omit the comment header");
  app.add_flag("--no-timestamp", no_timestamp, "omit the generation timestamp");
  try {
    app.parse(argc, argv);
    if (!grid.empty()) config.grid = GridSpec::parse(grid);
    if (!ladder.empty()) config.sigma_ladder = parse_values(ladder);
    if (!h_grid.empty()) config.h_grid = parse_values(h_grid);
    if (*x_max_opt) config.x_max = x_max;
    for (const auto& p : params) {
      const auto eq = p.find('=');
      if (eq == std::string::npos) throw DomainError("--param '" + p + "' must read name=value");
      config.system_params[p.substr(0, eq)] = parse_number(p.substr(eq + 1));
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    exit_code = 0;
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    err << "error[input]: " << e.what() << '\n';
    exit_code = 2;
    return std::nullopt;
  } catch (const DomainError& e) {
    err << "error[domain]: " << e.what() << '\n';
    exit_code = 2;
    return std::nullopt;
  }
  config.header = !no_header;
  config.timestamp = !no_timestamp;
  exit_code = 0;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::string text;
    const std::string& sub = config.subcommand;
    if (sub == "gen") {
      text = run_gen(config);
    } else if (sub == "count") {
      text = run_count(config);
    } else if (sub == "zeta") {
      text = run_zeta(config);
    } else if (sub == "decompose") {
      text = run_decompose(config);
    } else if (sub == "chebyshev") {
      text = run_chebyshev(config);
    } else if (sub == "probe-boundary") {
      text = run_probe_boundary(config);
    } else if (sub == "probe-wi") {
      text = run_probe_wi(config);
    } else if (sub == "profile") {
      text = run_profile(config);
    } else {
      throw DomainError("unknown subcommand '" + sub + "'");
    }
    emit(config, text, out);
    return 0;
  } catch (const TruncationError& e) {
    err << "error[truncation]: " << e.what() << " (needed x_max = " << num(e.needed_x_max()) << ")\n";
    return 4;
  } catch (const ReliabilityError& e) {
    err << "error[reliability]: " << e.what() << '\n';
    return 3;
  } catch (const DomainError& e) {
    err << "error[domain]: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace beurling::cli
