#include "casimir1d/quadrature.hpp"

#include "casimir1d/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <vector>

namespace casimir1d {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Kronrod abscissae (descending), Kronrod weights, and the 10-point Gauss
// weights attached to the odd-indexed abscissae.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208931966218, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651146};

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Segment& x, const Segment& y) const {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;  // deterministic tie-break
  }
};

}  // namespace

QuadratureEstimate gauss_kronrod21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::abs(half);

  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  const double fc = f(center);
  double res_g = 0.0;
  double res_k = kWgk[10] * fc;
  double res_abs = std::abs(res_k);
  for (int j = 0; j < 5; ++j) {
    const int jj = 2 * j + 1;
    const double dx = half * kXgk[jj];
    const double v1 = f(center - dx);
    const double v2 = f(center + dx);
    f1[jj] = v1;
    f2[jj] = v2;
    res_g += kWg[j] * (v1 + v2);
    res_k += kWgk[jj] * (v1 + v2);
    res_abs += kWgk[jj] * (std::abs(v1) + std::abs(v2));
  }
  for (int j = 0; j < 5; ++j) {
    const int jj = 2 * j;
    const double dx = half * kXgk[jj];
    const double v1 = f(center - dx);
    const double v2 = f(center + dx);
    f1[jj] = v1;
    f2[jj] = v2;
    res_k += kWgk[jj] * (v1 + v2);
    res_abs += kWgk[jj] * (std::abs(v1) + std::abs(v2));
  }
  const double mean = 0.5 * res_k;
  double res_asc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    res_asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
  }

  QuadratureEstimate out;
  out.value = res_k * half;
  res_abs *= abs_half;
  res_asc *= abs_half;
  double err = std::abs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) {
    err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  }
  if (res_abs > kTiny / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * res_abs, err);
  }
  out.abs_error_estimate = err;
  out.evaluations = 21;
  out.converged = std::isfinite(out.value);
  return out;
}

QuadratureEstimate integrate_adaptive(const Integrand& f, double a, double b,
                                      const AdaptiveOptions& opts) {
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw std::domain_error("integrate_adaptive: limits must be finite");
  }
  if (!(opts.abs_tol > 0.0 || opts.rel_tol > 0.0)) {
    throw std::domain_error("integrate_adaptive: a positive tolerance is required");
  }
  QuadratureEstimate out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  const std::size_t panels = std::max<std::size_t>(1, opts.initial_panels);
  std::vector<Segment> heap;
  heap.reserve(panels + 64);
  std::vector<Segment> frozen;
  double total = 0.0;
  double total_err = 0.0;
  const double width = (b - a) / static_cast<double>(panels);
  for (std::size_t i = 0; i < panels; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = (i + 1 == panels) ? b : a + width * static_cast<double>(i + 1);
    const auto r = gauss_kronrod21(f, lo, hi);
    out.evaluations += r.evaluations;
    heap.push_back({lo, hi, r.value, r.abs_error_estimate});
    total += r.value;
    total_err += r.abs_error_estimate;
  }
  std::make_heap(heap.begin(), heap.end(), ByError{});

  auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
  bool capped = false;
  while (total_err > target() && !heap.empty()) {
    if (heap.size() + frozen.size() >= opts.max_intervals) {
      capped = true;
      break;
    }
    std::pop_heap(heap.begin(), heap.end(), ByError{});
    const Segment s = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (s.a + s.b);
    const double scale = std::max(std::abs(s.a), std::abs(s.b));
    if (!(mid > s.a && mid < s.b) || (s.b - s.a) <= 100.0 * kEps * scale) {
      frozen.push_back(s);  // cannot be refined further
      continue;
    }
    const auto left = gauss_kronrod21(f, s.a, mid);
    const auto right = gauss_kronrod21(f, mid, s.b);
    out.evaluations += left.evaluations + right.evaluations;
    total += left.value + right.value - s.value;
    total_err += left.abs_error_estimate + right.abs_error_estimate - s.error;
    heap.push_back({s.a, mid, left.value, left.abs_error_estimate});
    std::push_heap(heap.begin(), heap.end(), ByError{});
    heap.push_back({mid, s.b, right.value, right.abs_error_estimate});
    std::push_heap(heap.begin(), heap.end(), ByError{});
  }

  const bool met = !capped && total_err <= target();

  // Re-sum in interval order so the result does not depend on update history.
  heap.insert(heap.end(), frozen.begin(), frozen.end());
  std::sort(heap.begin(), heap.end(), [](const Segment& x, const Segment& y) { return x.a < y.a; });
  double sum = 0.0;
  double comp = 0.0;
  double err = 0.0;
  for (const auto& s : heap) {
    const double y = s.value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += s.error;
  }
  out.value = sum;
  out.abs_error_estimate = err;
  out.converged = met && std::isfinite(sum);
  return out;
}

QuadratureEstimate integrate_smooth_semi_infinite(const Integrand& f, double decay_scale,
                                                  double tol, std::size_t max_intervals) {
  if (!(decay_scale > 0.0) || !(tol > 0.0)) {
    throw std::domain_error("integrate_smooth_semi_infinite: decay_scale and tol must be > 0");
  }
  const Integrand mapped = [&](double t) {
    const double one_minus = 1.0 - t;
    const double x = decay_scale * t / one_minus;
    if (!std::isfinite(x)) return 0.0;
    const double v = f(x) * decay_scale / (one_minus * one_minus);
    return std::isfinite(v) ? v : 0.0;
  };
  AdaptiveOptions opts;
  opts.abs_tol = tol;
  opts.initial_panels = 4;
  opts.max_intervals = max_intervals;
  return integrate_adaptive(mapped, 0.0, 1.0, opts);
}

double default_switch_point(double angular_rate) {
  return std::max(10.0, 4.0 * std::numbers::pi / angular_rate);
}

void validate(const OscillatorySpec& spec) {
  if (!(std::isfinite(spec.angular_rate) && spec.angular_rate > 0.0)) {
    throw std::domain_error("oscillatory spec: angular_rate must be > 0");
  }
  if (spec.switch_point != 0.0 &&
      !(spec.switch_point >= 2.0 * std::numbers::pi / spec.angular_rate)) {
    throw std::domain_error("oscillatory spec: switch_point must cover one full period");
  }
  if (spec.max_half_periods < 4) {
    throw std::domain_error("oscillatory spec: max_half_periods must be >= 4");
  }
  if (!(spec.head_panel_half_periods > 0.0)) {
    throw std::domain_error("oscillatory spec: head_panel_half_periods must be > 0");
  }
}

double wynn_epsilon(std::span<const double> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0.0;
  if (n < 3) return s.back();
  // prev = eps_{k-1}, cur = eps_k; column k has n - k entries.
  std::vector<double> prev(n + 1, 0.0);
  std::vector<double> cur(s.begin(), s.end());
  double best = s.back();
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t m = n - k;
    std::vector<double> next(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0 || !std::isfinite(diff)) {
        // Exact stagnation: the column already holds the limit.
        return (k % 2 == 1) ? cur[m] : best;
      }
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    if (k % 2 == 0) {
      if (!std::isfinite(next.back())) break;
      best = next.back();
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return best;
}

namespace {

// Accelerated sum of a stream of panel integrals.
class TailAccumulator {
 public:
  void push(double panel, double panel_error) {
    sum_ += panel;
    panel_error_ += panel_error;
    partial_.push_back(sum_);
    const std::size_t window = std::min<std::size_t>(partial_.size(), kWindow);
    const std::span<const double> tail(partial_.data() + partial_.size() - window, window);
    estimates_.push_back(wynn_epsilon(tail));
  }

  double value() const { return estimates_.empty() ? 0.0 : estimates_.back(); }

  double error() const {
    const std::size_t n = estimates_.size();
    if (n < 3) return std::numeric_limits<double>::infinity();
    const double e0 = estimates_[n - 1];
    const double e1 = estimates_[n - 2];
    const double e2 = estimates_[n - 3];
    return std::abs(e0 - e1) + std::abs(e0 - e2) + panel_error_ +
           64.0 * kEps * std::abs(e0);
  }

 private:
  static constexpr std::size_t kWindow = 41;
  double sum_ = 0.0;
  double panel_error_ = 0.0;
  std::vector<double> partial_;
  std::vector<double> estimates_;
};

}  // namespace

OscillatoryEstimate integrate_oscillatory_tail(const Integrand& f, const OscillatorySpec& spec,
                                               double tol) {
  validate(spec);
  if (!(tol > 0.0)) throw std::domain_error("integrate_oscillatory_tail: tol must be > 0");

  const double omega = spec.angular_rate;
  const double half_period = std::numbers::pi / omega;
  const double requested =
      spec.switch_point > 0.0 ? spec.switch_point : default_switch_point(omega);
  // Align Q with a zero of cos(omega q): omega Q = (m + 1/2) pi.
  const double m = std::ceil(requested / half_period - 0.5);
  const double q_switch = (m + 0.5) * half_period;

  OscillatoryEstimate out;
  TailDiagnostics& diag = out.tail;
  diag.switch_point = q_switch;

  AdaptiveOptions head_opts;
  head_opts.abs_tol = 0.5 * tol;
  head_opts.max_intervals = spec.max_head_intervals;
  const double head_panels =
      std::ceil(q_switch / (spec.head_panel_half_periods * half_period));
  head_opts.initial_panels = static_cast<std::size_t>(
      std::clamp(head_panels, 1.0, static_cast<double>(spec.max_head_intervals / 2)));
  const auto head = integrate_adaptive(f, 0.0, q_switch, head_opts);
  diag.head = head.value;
  diag.head_error = head.abs_error_estimate;
  std::size_t evaluations = head.evaluations;

  const bool cross = spec.leading_amplitude.has_value();
  const double amplitude = spec.leading_amplitude.value_or(0.0);
  const Integrand residual = [&](double q) {
    return f(q) - amplitude * std::cos(omega * q) / q;
  };

  const double tail_tol = 0.5 * tol;
  AdaptiveOptions panel_opts;
  panel_opts.abs_tol = 1e-3 * tail_tol;
  panel_opts.max_intervals = 2000;

  TailAccumulator main_tail;
  TailAccumulator check_tail;
  constexpr std::size_t kMinPanels = 8;
  bool tail_converged = false;
  bool panels_ok = true;
  std::size_t j = 0;
  for (; j < spec.max_half_periods; ++j) {
    const double lo = q_switch + static_cast<double>(j) * half_period;
    const double hi = lo + half_period;
    const auto p = integrate_adaptive(f, lo, hi, panel_opts);
    evaluations += p.evaluations;
    panels_ok = panels_ok && p.converged;
    main_tail.push(p.value, p.abs_error_estimate);
    if (cross) {
      const auto r = integrate_adaptive(residual, lo, hi, panel_opts);
      evaluations += r.evaluations;
      panels_ok = panels_ok && r.converged;
      check_tail.push(r.value, r.abs_error_estimate);
    }
    if (j + 1 >= kMinPanels && main_tail.error() <= tail_tol &&
        (!cross || check_tail.error() <= tail_tol)) {
      tail_converged = true;
      ++j;
      break;
    }
  }
  diag.half_periods = j;
  diag.tail = main_tail.value();
  diag.tail_error = main_tail.error();

  if (cross) {
    diag.has_cross_check = true;
    diag.cross_check_tail = -amplitude * cosine_integral(omega * q_switch) + check_tail.value();
    diag.cross_check_error = check_tail.error();
    const double floor = 64.0 * kEps * (std::abs(diag.tail) + std::abs(diag.cross_check_tail));
    diag.consistent = std::abs(diag.tail - diag.cross_check_tail) <=
                      diag.tail_error + diag.cross_check_error + floor;
  }

  double tail_error = diag.tail_error;
  if (cross) tail_error = std::max(tail_error, std::abs(diag.tail - diag.cross_check_tail));
  out.estimate.value = head.value + diag.tail;
  out.estimate.abs_error_estimate = head.abs_error_estimate + tail_error;
  out.estimate.evaluations = evaluations;
  out.estimate.converged = head.converged && tail_converged && panels_ok && diag.consistent &&
                           std::isfinite(out.estimate.value);
  return out;
}

}  // namespace casimir1d
