#include "beurling/tauberian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "beurling/errors.hpp"
#include "beurling/numerics.hpp"

namespace beurling {

namespace {

constexpr double kPi = std::numbers::pi;

double fejer(double z) {
  const double h = 0.5 * z;
  if (std::abs(h) < 1e-4) return (1.0 - h * h / 3.0) / (2.0 * kPi);
  const double sinc = std::sin(h) / h;
  return sinc * sinc / (2.0 * kPi);
}

// int_z^inf phi for the undilated kernel.
double fejer_upper_tail(double z) {
  if (z == 0.0) return 0.5;
  if (z < 0.0) return 1.0 - fejer_upper_tail(-z);
  const double s = std::sin(0.5 * z);
  return (numerics::sine_integral_complement(z) + 2.0 * s * s / z) / kPi;
}

}  // namespace

double Kernel::operator()(double x) const { return fejer(x / n) / n; }

double Kernel::fourier(double t) const { return std::max(0.0, 1.0 - n * std::abs(t)); }

double Kernel::cdf(double z) const {
  if (z > 0.0) return 1.0 - fejer_upper_tail(z / n);
  return fejer_upper_tail(-z / n);
}

double Kernel::upper_tail(double z) const { return fejer_upper_tail(z / n); }

double Kernel::mass_outside(double half_width) const {
  if (!(half_width > 0.0)) return 1.0;
  return 2.0 * upper_tail(half_width);
}

double Kernel::mass_outside_bound(double half_width) const {
  const double t = half_width;
  return 2.0 * n / (kPi * t) + 2.0 * n * static_cast<double>(n) / (kPi * t * t);
}

double Kernel::tail_quantile(double mass) const {
  if (!(mass > 0.0) || mass >= 0.5) throw DomainError("tail_quantile: mass must lie in (0, 1/2)");
  double lo = 0.0;
  double hi = 1.0;
  while (fejer_upper_tail(hi) > mass) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (fejer_upper_tail(mid) > mass ? lo : hi) = mid;
  }
  return hi * n;
}

Kernel make_kernel(int n) {
  if (n < 1) throw DomainError("make_kernel: dilation n must be >= 1");
  Kernel k;
  k.n = n;
  return k;
}

// ---------------------------------------------------------------------------

double XSignal::operator()(double x) const {
  if (x < 0.0) return 0.0;
  double v = steps.empty() ? 0.0 : steps(x);
  if (smooth) v += smooth(x);
  return v;
}

double XSignal::left_limit(double x) const {
  if (x <= 0.0) return 0.0;
  double v = steps.empty() ? 0.0 : steps.left_limit(x);
  if (smooth) v += smooth(x);
  return v;
}

double XSignal::damped(double x) const {
  if (x < 0.0) return 0.0;
  double v = 0.0;
  if (!steps.empty()) {
    const double st = steps(x);
    if (st != 0.0) v += std::exp(std::log(std::abs(st)) - x) * (st < 0.0 ? -1.0 : 1.0);
  }
  if (damped_smooth) {
    v += damped_smooth(x);
  } else if (smooth) {
    v += std::exp(-x) * smooth(x);
  }
  return v;
}

XSignal XSignal::from_steps(StepFunction steps, double x_max) {
  XSignal s;
  s.steps = std::move(steps);
  s.x_max = x_max;
  return s;
}

XSignal XSignal::from_function(std::function<double(double)> fn, double x_max,
                               std::function<double(double)> damped) {
  XSignal s;
  s.smooth = std::move(fn);
  s.damped_smooth = std::move(damped);
  s.x_max = x_max;
  return s;
}

const char* to_string(DecreaseClass c) {
  switch (c) {
    case DecreaseClass::non_decreasing: return "non-decreasing";
    case DecreaseClass::strongly_slowly_decreasing: return "strongly-slowly-decreasing";
    case DecreaseClass::boundedly_decreasing: return "boundedly-decreasing";
    case DecreaseClass::unbounded_decrease: return "unbounded-decrease";
  }
  return "boundedly-decreasing";
}

namespace {

// min of the smooth part on [p, q]: 128 samples, then golden section around
// the best one.
double smooth_minimum(const std::function<double(double)>& g, double p, double q) {
  constexpr int kSamples = 128;
  if (!(q > p)) return g(p);
  const double step = (q - p) / kSamples;
  double best = g(p);
  int best_i = 0;
  for (int i = 1; i <= kSamples; ++i) {
    const double v = g(p + step * i);
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  double a = p + step * std::max(0, best_i - 1);
  double b = p + step * std::min(kSamples, best_i + 1);
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = g(c);
  double fd = g(d);
  for (int it = 0; it < 80 && b - a > 1e-14 * (1.0 + std::abs(a)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = g(d);
    }
  }
  return std::min({best, fc, fd});
}

// min over y in [x, x + delta] of S(y) - S(x).
double window_minimum(const XSignal& s, double x, double delta) {
  const double base = s(x);
  const double end = x + delta;
  std::vector<double> cuts{x};
  if (!s.steps.empty()) {
    const auto jumps = s.steps.jumps();
    auto first = std::upper_bound(jumps.begin(), jumps.end(), x);
    auto last = std::upper_bound(jumps.begin(), jumps.end(), end);
    cuts.insert(cuts.end(), first, last);
  }
  cuts.push_back(end);
  double best = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double p = cuts[k];
    const double q = cuts[k + 1];
    const double level = s.steps.empty() ? 0.0 : s.steps(p);
    double m = level;
    if (s.smooth) m += smooth_minimum(s.smooth, p, q);
    best = std::min(best, m - base);
  }
  // the right end itself, which belongs to the window and may carry a jump
  best = std::min(best, s(end) - base);
  return best;
}

}  // namespace

SlowDecreaseProfile slow_decrease_profile(const XSignal& s, double delta, std::span<const double> x_grid) {
  if (!(delta > 0.0)) throw DomainError("slow_decrease_profile: delta must be positive");
  if (x_grid.empty()) throw DomainError("slow_decrease_profile: empty grid");
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    if (x_grid[i] < 0.0) throw DomainError("slow_decrease_profile: grid must lie in x >= 0");
    if (i > 0 && !(x_grid[i] > x_grid[i - 1])) {
      throw DomainError("slow_decrease_profile: grid must be increasing");
    }
  }
  if (x_grid.back() + delta > s.x_max * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "slow_decrease_profile: window reaches x = " << x_grid.back() + delta
       << " beyond the supported range x_max = " << s.x_max;
    throw DomainError(os.str());
  }
  SlowDecreaseProfile profile;
  profile.delta = delta;
  profile.x.assign(x_grid.begin(), x_grid.end());
  for (double x : x_grid) {
    const double m = window_minimum(s, x, delta);
    profile.eta_hat.push_back(std::max(0.0, -m) * std::exp(-x));
  }
  profile.envelope = profile.eta_hat;
  for (std::size_t i = profile.envelope.size(); i-- > 1;) {
    profile.envelope[i - 1] = std::max(profile.envelope[i - 1], profile.envelope[i]);
  }

  const double lo = x_grid.front();
  const double range = x_grid.back() - lo;
  const double decade = std::log(10.0);
  std::size_t segments = 1;
  double length = range;
  if (range >= 4.0 * decade) {
    segments = static_cast<std::size_t>(std::floor(range / decade));
    length = decade;
  } else if (x_grid.size() >= 4 && range > 0.0) {
    segments = 4;
    length = range / 4.0;
  }
  std::vector<double> maxima(segments, 0.0);
  std::vector<bool> seen(segments, false);
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    std::size_t k = length > 0.0 ? static_cast<std::size_t>(std::floor((x_grid[i] - lo) / length)) : 0;
    k = std::min(k, segments - 1);
    maxima[k] = std::max(maxima[k], profile.eta_hat[i]);
    seen[k] = true;
  }
  for (std::size_t k = 0; k < segments; ++k) {
    if (seen[k]) profile.segment_max.push_back(maxima[k]);
  }

  const auto& m = profile.segment_max;
  const double largest = *std::max_element(profile.eta_hat.begin(), profile.eta_hat.end());
  if (largest <= 1e-12) {
    profile.classification = DecreaseClass::non_decreasing;
    return profile;
  }
  std::size_t first = 0;
  while (first < m.size() && !(m[first] > 1e-12)) ++first;
  bool growing = m.size() - first >= 3 && m.back() > 2.0 * m[first];
  for (std::size_t k = first + 1; k < m.size() && growing; ++k) {
    if (m[k] < 1.05 * m[k - 1]) growing = false;
  }
  const double seg_largest = *std::max_element(m.begin(), m.end());
  // the last two segments, so a decrease that recurs with a period shorter
  // than two segments is always seen
  const double trailing = m.size() >= 2 ? std::max(m[m.size() - 2], m.back()) : m.back();
  if (growing) {
    profile.classification = DecreaseClass::unbounded_decrease;
  } else if (profile.envelope.back() <= 0.05 * profile.envelope.front() && trailing <= 0.5 * seg_largest) {
    profile.classification = DecreaseClass::strongly_slowly_decreasing;
  } else {
    profile.classification = DecreaseClass::boundedly_decreasing;
  }
  return profile;
}

IteratedBound iterated_bound_check(const XSignal& s, const std::function<double(double)>& eta, double x, double h) {
  if (!(h >= 0.0)) throw DomainError("iterated_bound_check: h must be >= 0");
  const double sx = s(x);
  const double sxh = s(x + h);
  IteratedBound out;
  out.lhs = sxh - sx;
  const double ex = std::exp(x);
  out.rhs = -eta(x) * ex * (1.0 + h * std::exp(h));
  out.margin = out.lhs - out.rhs;
  const double scale = std::max({std::abs(sx), std::abs(sxh), std::abs(out.rhs), ex});
  out.holds = out.margin >= -1e-9 * scale;
  return out;
}

// ---------------------------------------------------------------------------

MollifierValue mollifier_convolution(const XSignal& s, const Kernel& kernel, double y, double budget) {
  const double n = kernel.n;
  MollifierValue out;
  if (std::isfinite(s.x_max)) {
    out.mass_beyond = kernel.upper_tail(s.x_max - y);
    if (out.mass_beyond > budget) {
      const double needed = y + kernel.tail_quantile(budget);
      std::ostringstream os;
      os.precision(12);
      os << "mollifier_convolution: kernel mass " << out.mass_beyond << " beyond the data range x_max = "
         << s.x_max << " exceeds the truncation budget " << budget << " at y = " << y << ", n = " << kernel.n
         << "; data up to x = " << needed << " would be needed";
      throw TruncationError(os.str(), needed);
    }
    out.x_end = s.x_max;
  } else {
    out.x_end = y + kernel.tail_quantile(1e-6);
    out.mass_beyond = kernel.upper_tail(out.x_end - y);
  }
  if (!(out.x_end > 0.0)) return out;

  std::vector<double> cuts{0.0, out.x_end};
  for (double scale = n / 8.0; scale < 4.0 * out.x_end + 4.0 * std::abs(y); scale *= 2.0) {
    for (double c : {y - scale, y + scale}) {
      if (c > 0.0 && c < out.x_end) cuts.push_back(c);
    }
  }
  if (y > 0.0 && y < out.x_end) cuts.push_back(y);
  if (!s.steps.empty()) {
    for (double j : s.steps.jumps()) {
      if (j > 0.0 && j < out.x_end) cuts.push_back(j);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  // keep each panel within a few kernel oscillations
  const double longest = 64.0 * n;
  std::vector<double> panels;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double gap = cuts[k + 1] - cuts[k];
    const auto parts = static_cast<std::size_t>(std::ceil(gap / longest));
    for (std::size_t j = 0; j < parts; ++j) panels.push_back(cuts[k] + gap * static_cast<double>(j) / parts);
  }
  panels.push_back(cuts.back());
  cuts = std::move(panels);

  double total = 0.0;
  double compensation = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double p = cuts[k];
    const double q = cuts[k + 1];
    if (!(q > p)) continue;
    const double level = s.steps.empty() ? 0.0 : s.steps(p);
    auto integrand = [&](double x) {
      double damped = 0.0;
      if (level != 0.0) damped += std::exp(std::log(std::abs(level)) - x) * (level < 0.0 ? -1.0 : 1.0);
      if (s.damped_smooth) {
        damped += s.damped_smooth(x);
      } else if (s.smooth) {
        damped += std::exp(-x) * s.smooth(x);
      }
      return damped * kernel(x - y);
    };
    bool ok = true;
    const double piece = numerics::adaptive_gauss_legendre(integrand, p, q, 1e-10, 1e-16, 30, &ok);
    if (!ok) {
      std::ostringstream os;
      os << "mollifier_convolution: quadrature did not converge on [" << p << ", " << q << "]";
      throw ReliabilityError(os.str());
    }
    // Neumaier summation across many short panels
    const double t = total + piece;
    if (std::abs(total) >= std::abs(piece)) {
      compensation += (total - t) + piece;
    } else {
      compensation += (piece - t) + total;
    }
    total = t;
  }
  out.value = total + compensation;

  const double half = 0.5 * out.x_end;
  double peak = std::abs(s.damped(half));
  if (!s.steps.empty()) {
    const auto jumps = s.steps.jumps();
    for (auto it = std::lower_bound(jumps.begin(), jumps.end(), half); it != jumps.end() && *it <= out.x_end; ++it) {
      peak = std::max(peak, std::abs(s.damped(*it)));
    }
  }
  if (s.smooth || s.damped_smooth) {
    for (int i = 0; i <= 256; ++i) peak = std::max(peak, std::abs(s.damped(half + half * i / 256.0)));
  }
  out.trunc_bound = out.mass_beyond * peak;
  return out;
}

WienerIkeharaReport wiener_ikehara_probe(const GeneralizedPrimeSystem& system, double a, int n,
                                         std::span<const double> y_grid, double budget) {
  const Kernel kernel = make_kernel(n);
  if (y_grid.empty()) throw DomainError("wiener_ikehara_probe: empty y grid");
  if (!(a > 0.0)) throw DomainError("wiener_ikehara_probe: a must be positive");
  const double y_max = *std::max_element(y_grid.begin(), y_grid.end());
  double x_data = 0.0;
  if (system.is_complete()) {
    x_data = y_max + kernel.tail_quantile(budget) * (1.0 + 1e-9);
  } else {
    x_data = std::log(system.x_max_supported());
  }
  const XSignal s = XSignal::from_steps(psi_log_scale(system, x_data), x_data);

  WienerIkeharaReport report;
  report.a = a;
  report.n = n;
  report.x_data_max = x_data;
  for (double y : y_grid) {
    const MollifierValue v = mollifier_convolution(s, kernel, y, budget);
    WienerIkeharaRow row{y, v.value, v.value - a, v.trunc_bound};
    report.max_abs_deviation = std::max(report.max_abs_deviation, std::abs(row.deviation));
    report.rows.push_back(row);
  }
  for (std::size_t i = report.rows.size(); i-- > 0;) {
    if (report.rows[i].a_value >= 0.5 * a) {
      report.lock_y = report.rows[i].y;
    } else {
      break;
    }
  }
  report.liminf_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = y_grid.size() / 2; i < y_grid.size(); ++i) {
    report.liminf_ratio = std::min(report.liminf_ratio, s.damped(y_grid[i]));
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct WeightedSample {
  double u;
  double weight;  // trapezoid weight times f(u)
};

// sum_i w_i phi_n(z - u_i) - (sum_i w_i) phi_n(z), with
// phi_n(y) = 2n sin^2(y/(2n)) / (pi y^2). sin((z - u)/(2n)) comes from the
// angle-difference formula, so each sample costs no trig call.
class SampleSum {
 public:
  SampleSum(const std::vector<WeightedSample>& samples, const Kernel& kernel) : kernel_(kernel) {
    const double scale = 0.5 / kernel.n;
    for (const auto& smp : samples) {
      u_.push_back(smp.u);
      w_.push_back(smp.weight);
      sin_.push_back(std::sin(smp.u * scale));
      cos_.push_back(std::cos(smp.u * scale));
      total_ += smp.weight;
    }
  }

  double operator()(double z) const {
    const double n = kernel_.n;
    const double scale = 0.5 / n;
    const double sz = std::sin(z * scale);
    const double cz = std::cos(z * scale);
    double acc = 0.0;
    for (std::size_t i = 0; i < u_.size(); ++i) {
      const double y = z - u_[i];
      double value = 0.0;
      if (std::abs(y) * scale < 1e-4) {
        value = kernel_(y);
      } else {
        const double s = sz * cos_[i] - cz * sin_[i];
        value = 2.0 * n * s * s / (kPi * y * y);
      }
      acc += w_[i] * value;
    }
    return acc - total_ * kernel_(z);
  }

 private:
  Kernel kernel_;
  std::vector<double> u_, w_, sin_, cos_;
  double total_ = 0.0;
};

double smoothing_l1(const std::vector<WeightedSample>& samples, const Kernel& kernel, double lo, double hi,
                    double support_lo, double support_hi) {
  const SampleSum sum(samples, kernel);
  auto g = [&](double z) { return std::abs(sum(z)); };
  const double n = kernel.n;
  std::vector<double> cuts;
  const double core_lo = support_lo - 4.0 * n;
  const double core_hi = support_hi + 4.0 * n;
  const double panel = n / 4.0;
  const std::size_t core_panels = static_cast<std::size_t>(std::ceil((core_hi - core_lo) / panel));
  for (std::size_t i = 0; i <= core_panels; ++i) {
    cuts.push_back(core_lo + (core_hi - core_lo) * static_cast<double>(i) / static_cast<double>(core_panels));
  }
  for (double d = 8.0 * n; support_hi + d < hi; d *= 2.0) {
    cuts.push_back(support_hi + d);
    cuts.push_back(support_lo - d);
  }
  cuts.push_back(lo);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (cuts[k] < lo || cuts[k + 1] > hi) continue;
    total += numerics::adaptive_gauss_legendre(g, cuts[k], cuts[k + 1], 1e-9, 1e-13, 20);
  }
  return total;
}

}  // namespace

std::vector<SmoothingRow> korevaar_smoothing_check(std::span<const double> x, std::span<const double> f,
                                                   std::span<const int> n_list) {
  constexpr double kWiden = 1000.0;
  constexpr double kSamplingTolerance = 1e-6;
  if (x.size() != f.size()) throw DomainError("korevaar_smoothing_check: samples and grid differ in length");
  if (x.size() < 5 || x.size() % 2 == 0) {
    throw DomainError("korevaar_smoothing_check: needs an odd number (>= 5) of samples");
  }
  const double step = (x.back() - x.front()) / static_cast<double>(x.size() - 1);
  if (!(step > 0.0)) throw DomainError("korevaar_smoothing_check: grid must be increasing");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs((x[i] - x[i - 1]) - step) > 1e-9 * step + 1e-12 * std::abs(x[i])) {
      throw DomainError("korevaar_smoothing_check: grid must be uniform");
    }
  }
  std::vector<WeightedSample> fine;
  std::vector<WeightedSample> coarse;
  double first_moment = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool end = i == 0 || i + 1 == x.size();
    if (f[i] != 0.0) fine.push_back({x[i], f[i] * step * (end ? 0.5 : 1.0)});
    if (i % 2 == 0 && f[i] != 0.0) coarse.push_back({x[i], f[i] * 2.0 * step * (end ? 0.5 : 1.0)});
    first_moment += std::abs(f[i]) * step * (end ? 0.5 : 1.0) * std::abs(x[i]);
  }
  const double support_lo = std::min(x.front(), 0.0);
  const double support_hi = std::max(x.back(), 0.0);

  std::vector<SmoothingRow> rows;
  for (int n : n_list) {
    const Kernel kernel = make_kernel(n);
    SmoothingRow row;
    row.n = n;
    const double lo = support_lo - kWiden * n;
    const double hi = support_hi + kWiden * n;
    if (!fine.empty()) {
      row.norm = smoothing_l1(fine, kernel, lo, hi, support_lo, support_hi);
      const double rough = smoothing_l1(coarse, kernel, lo, hi, support_lo, support_hi);
      row.sampling_error = std::abs(row.norm - rough);
    }
    row.tail_bound = 1.01 * (2.0 * first_moment / n) * (1.0 / (kPi * kWiden) + 2.0 / (kPi * kWiden * kWiden));
    if (row.sampling_error > kSamplingTolerance) {
      std::ostringstream os;
      os << "korevaar_smoothing_check: sampling-error estimate " << row.sampling_error << " at n = " << n
         << " exceeds " << kSamplingTolerance << "; sample f more densely";
      throw ReliabilityError(os.str());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace beurling
