#include "casimir1d/forces.hpp"

#include "casimir1d/scattering.hpp"
#include "casimir1d/series.hpp"
#include "casimir1d/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casimir1d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

void require_d(double d) {
  if (!(std::isfinite(d) && d > 0.0)) throw std::domain_error("d must be finite and > 0");
}

ForceValue canonical(double d, double temperature, const ForceOptions& opts) {
  const Integrand f = [d, temperature](double q) {
    return canonical_force_integrand(q, d, temperature);
  };
  OscillatorySpec spec;
  spec.angular_rate = 2.0 * d;
  spec.switch_point = opts.switch_point > 0.0 ? opts.switch_point
                                              : std::max(kDefaultForceSwitchPoint,
                                                         default_switch_point(spec.angular_rate));
  spec.max_half_periods = opts.max_half_periods;
  const double head_half_periods = spec.switch_point * spec.angular_rate / kPi;
  spec.max_head_intervals =
      std::max<std::size_t>(spec.max_head_intervals,
                            static_cast<std::size_t>(4.0 * head_half_periods) + 1000);
  // q K(q, d) / (2 pi) -> -cos(2dq) / (4 pi q)
  if (opts.tail_cross_check) spec.leading_amplitude = -1.0 / kFourPi;
  const auto r = integrate_oscillatory_tail(f, spec, opts.tol);

  ForceValue out;
  out.value = r.estimate.value;
  out.method = Method::canonical;
  out.point = {d, temperature};
  out.estimate = r.estimate;
  out.tail = r.tail;
  return out;
}

// 4 pi n T^2 / (e^{x}(1+y)^2 - 1), x = 4 pi n T d, y = 4 pi n T
double matsubara_force_term(std::size_t n, double d, double temperature) {
  const double y = kFourPi * static_cast<double>(n) * temperature;
  const double e = std::exp(-y * d);
  const double one_y = 1.0 + y;
  return y * temperature * e / (one_y * one_y - e);
}

// -log(1 - u) is convex and vanishes at 0, and u shrinks by at least
// e^{-4 pi T d} per step, so the log terms do too.
SeriesOptions log_series_options(double d, double t) {
  SeriesOptions so;
  const double decay = std::exp(-4.0 * kPi * t * d);
  so.tail_ratio_bound = [decay](std::size_t) { return decay; };
  return so;
}

}  // namespace

double canonical_force_integrand(double q, double d, double temperature) noexcept {
  const double weight = temperature > 0.0 ? bose_weighted_momentum(q, temperature) : q;
  return weight * kernel_unchecked(q, d) / kTwoPi;
}

double lifshitz_zero_t_integrand(double zeta, double d) noexcept {
  if (zeta == 0.0) return 1.0 / (d + 2.0);
  // e^{dz}(1+z)^2 - 1 = expm1(s), s = dz + 2 log1p(z)
  const double s = d * zeta + 2.0 * std::log1p(zeta);
  if (s > 700.0) return zeta * std::exp(-s);
  return zeta / std::expm1(s);
}

ForceValue force_zero_t_canonical(double d, const ForceOptions& opts) {
  require_d(d);
  return canonical(d, 0.0, opts);
}

ForceValue force_zero_t_lifshitz(double d, const ForceOptions& opts) {
  require_d(d);
  const Integrand f = [d](double z) { return lifshitz_zero_t_integrand(z, d); };
  const double scale = 1.0 / d;
  const auto r = integrate_smooth_semi_infinite(f, scale, kFourPi * opts.tol);

  ForceValue out;
  out.value = -r.value / kFourPi;
  out.method = Method::lifshitz;
  out.point = {d, 0.0};
  out.estimate = r;
  out.estimate.value = out.value;
  out.estimate.abs_error_estimate = r.abs_error_estimate / kFourPi;
  return out;
}

ForceValue force_finite_t_canonical(const DimensionlessPoint& p, const ForceOptions& opts) {
  p.validate();
  if (p.temperature == 0.0) return force_zero_t_canonical(p.d, opts);
  return canonical(p.d, p.temperature, opts);
}

ForceValue force_finite_t_lifshitz(const DimensionlessPoint& p, const ForceOptions& opts) {
  p.validate();
  if (p.temperature == 0.0) return force_zero_t_lifshitz(p.d, opts);
  const double d = p.d;
  const double t = p.temperature;
  // term(n+1)/term(n) <= ((n+1)/n) e^{-4 pi T d}
  SeriesOptions so;
  const double decay = std::exp(-kFourPi * t * d);
  so.tail_ratio_bound = [decay](std::size_t n) {
    return decay * static_cast<double>(n + 1) / static_cast<double>(n);
  };
  const auto sum = sum_exponential_series(
      [d, t](std::size_t n) { return matsubara_force_term(n, d, t); }, 1, opts.tol, so);
  const double zero_mode = t / (2.0 * (d + 2.0));

  ForceValue out;
  out.value = -(sum.value + zero_mode);
  out.method = Method::lifshitz;
  out.point = p;
  out.estimate = sum;
  out.estimate.value = out.value;
  return out;
}

ForceValue force(const DimensionlessPoint& p, Method method, const ForceOptions& opts) {
  return method == Method::canonical ? force_finite_t_canonical(p, opts)
                                     : force_finite_t_lifshitz(p, opts);
}

FreeEnergyValue free_energy_lifshitz(const DimensionlessPoint& p, double cutoff_lambda,
                                     double tol) {
  p.validate();
  if (!(p.temperature > 0.0)) throw std::domain_error("free energy requires T > 0");
  if (!(std::isfinite(cutoff_lambda) && cutoff_lambda > 0.0)) {
    throw std::domain_error("cutoff lambda must be finite and > 0");
  }
  const double d = p.d;
  const double t = p.temperature;
  const auto sum = sum_exponential_series(
      [d, t](std::size_t n) {
        const double y = kFourPi * static_cast<double>(n) * t;
        const double one_y = 1.0 + y;
        return t * std::log1p(-std::exp(-y * d) / (one_y * one_y));
      },
      1, tol, log_series_options(d, t));
  const double zero_mode = 0.5 * t * std::log(kTwoPi * t * (d + 2.0) / cutoff_lambda);

  FreeEnergyValue out;
  out.value = sum.value + zero_mode;
  out.cutoff_lambda = cutoff_lambda;
  out.point = p;
  out.estimate = sum;
  out.estimate.value = out.value;
  return out;
}

double asymptotic_force(const DimensionlessPoint& p, Method method) {
  p.validate();
  const double denom = method == Method::lifshitz ? 2.0 : 4.0;
  return -p.temperature / (denom * p.d);
}

}  // namespace casimir1d
