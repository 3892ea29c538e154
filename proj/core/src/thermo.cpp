#include "casimir1d/thermo.hpp"

#include "casimir1d/scattering.hpp"
#include "casimir1d/series.hpp"
#include "casimir1d/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace casimir1d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

struct PanelResult {
  QuadratureEstimate outer;
  double worst_inner_error = 0.0;
  bool inner_converged = true;
};

}  // namespace

std::string_view to_string(EntropyMethod m) {
  switch (m) {
    case EntropyMethod::canonical: return "canonical";
    case EntropyMethod::lifshitz: return "lifshitz";
    case EntropyMethod::lifshitz_no_zero_mode: return "lifshitz_no_zero_mode";
  }
  return "canonical";
}

EntropyDensity entropy_density_canonical(double dtilde, double temperature, double tol,
                                         double qmax_over_t) {
  if (!(std::isfinite(dtilde) && dtilde > 0.0)) {
    throw std::domain_error("entropy density: separation must be finite and > 0");
  }
  if (!(std::isfinite(temperature) && temperature > 0.0)) {
    throw std::domain_error("entropy density: T must be finite and > 0");
  }
  if (!(tol > 0.0) || !(qmax_over_t > 0.0)) {
    throw std::domain_error("entropy density: tol and qmax_over_t must be > 0");
  }
  const double qmax = qmax_over_t * temperature;
  // Oscillation period in q is pi / dtilde; panels no wider than a quarter of it.
  const double panel = std::numbers::pi / (4.0 * dtilde);
  AdaptiveOptions opts;
  opts.abs_tol = kTwoPi * tol;
  opts.initial_panels = static_cast<std::size_t>(std::max(8.0, std::ceil(qmax / panel)));
  opts.max_intervals = std::max<std::size_t>(400000, 4 * opts.initial_panels);
  const Integrand f = [dtilde, temperature](double q) {
    return thermal_weight_unchecked(q, temperature) * kernel_unchecked(q, dtilde);
  };
  const auto r = integrate_adaptive(f, 0.0, qmax, opts);

  EntropyDensity out;
  out.value = -r.value / kTwoPi;
  out.dtilde = dtilde;
  out.temperature = temperature;
  out.estimate = r;
  out.estimate.value = out.value;
  out.estimate.abs_error_estimate = r.abs_error_estimate / kTwoPi;
  return out;
}

EntropyValue entropy_canonical(const DimensionlessPoint& p, double cutoff_lambda,
                               const EntropyOptions& opts) {
  p.validate();
  if (!(p.temperature > 0.0)) throw std::domain_error("canonical entropy requires T > 0");
  if (!(std::isfinite(cutoff_lambda) && cutoff_lambda > p.d)) {
    throw std::domain_error("cutoff lambda must be finite and > d");
  }
  if (!(opts.tol > 0.0)) throw std::domain_error("entropy tolerance must be > 0");

  const std::size_t panels = std::max<std::size_t>(1, opts.outer_panels);
  const double t_lo = std::log(p.d);
  const double t_hi = std::log(cutoff_lambda);
  const double width = (t_hi - t_lo) / static_cast<double>(panels);
  // Half the budget to the outer integral, half to the propagated inner error.
  const double inner_tol = 0.5 * opts.tol / (cutoff_lambda - p.d);
  const double outer_tol = 0.5 * opts.tol / static_cast<double>(panels);
  const double temperature = p.temperature;
  const double qmax_over_t = opts.qmax_over_t;

  auto run_panel = [=](std::size_t i) {
    PanelResult res;
    const Integrand g = [&](double t) {
      const double x = std::exp(t);
      const auto dens = entropy_density_canonical(x, temperature, inner_tol, qmax_over_t);
      res.worst_inner_error = std::max(res.worst_inner_error, dens.estimate.abs_error_estimate);
      res.inner_converged = res.inner_converged && dens.estimate.converged;
      return dens.value * x;
    };
    AdaptiveOptions o;
    o.abs_tol = outer_tol;
    o.max_intervals = 2000;
    const double a = t_lo + width * static_cast<double>(i);
    const double b = (i + 1 == panels) ? t_hi : t_lo + width * static_cast<double>(i + 1);
    res.outer = integrate_adaptive(g, a, b, o);
    return res;
  };

  std::vector<PanelResult> results(panels);
  const std::size_t jobs = std::max<std::size_t>(1, opts.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < panels; ++i) results[i] = run_panel(i);
  } else {
    for (std::size_t start = 0; start < panels; start += jobs) {
      std::vector<std::future<PanelResult>> batch;
      const std::size_t stop = std::min(panels, start + jobs);
      for (std::size_t i = start; i < stop; ++i) {
        batch.push_back(std::async(std::launch::async, run_panel, i));
      }
      for (std::size_t i = start; i < stop; ++i) results[i] = batch[i - start].get();
    }
  }

  EntropyValue out;
  out.method = EntropyMethod::canonical;
  out.point = p;
  out.cutoff_lambda = cutoff_lambda;
  double value = 0.0;
  double err = 0.0;
  double worst_inner = 0.0;
  bool converged = true;
  for (const auto& r : results) {  // fixed reduction order
    value += r.outer.value;
    err += r.outer.abs_error_estimate;
    worst_inner = std::max(worst_inner, r.worst_inner_error);
    converged = converged && r.outer.converged && r.inner_converged;
    out.estimate.evaluations += r.outer.evaluations;
  }
  err += worst_inner * (cutoff_lambda - p.d);
  out.value = value;
  out.estimate.value = value;
  out.estimate.abs_error_estimate = err;
  out.estimate.converged = converged && std::isfinite(value);
  return out;
}

EntropyValue entropy_lifshitz(const DimensionlessPoint& p, double cutoff_lambda,
                              bool include_zero_mode, double tol) {
  p.validate();
  if (!(p.temperature > 0.0)) throw std::domain_error("Lifshitz entropy requires T > 0");
  if (!(std::isfinite(cutoff_lambda) && cutoff_lambda > 0.0)) {
    throw std::domain_error("cutoff lambda must be finite and > 0");
  }
  const double d = p.d;
  const double t = p.temperature;
  // sum of -log(1 - u) minus sum of y (y d + d + 2) e^{-x} / ((1+y)((1+y)^2 - e^{-x})),
  // each with a rigorous geometric tail bound
  const double decay = std::exp(-kFourPi * t * d);
  SeriesOptions log_opts;
  log_opts.tail_ratio_bound = [decay](std::size_t) { return decay; };
  SeriesOptions deriv_opts;
  deriv_opts.tail_ratio_bound = [decay](std::size_t n) {
    const double g = static_cast<double>(n + 1) / static_cast<double>(n);
    return decay * g * g;
  };
  const auto logs = sum_exponential_series(
      [d, t](std::size_t n) {
        const double y = kFourPi * static_cast<double>(n) * t;
        const double one_y = 1.0 + y;
        return -std::log1p(-std::exp(-y * d) / (one_y * one_y));
      },
      1, 0.5 * tol, log_opts);
  const auto derivs = sum_exponential_series(
      [d, t](std::size_t n) {
        const double y = kFourPi * static_cast<double>(n) * t;
        const double e = std::exp(-y * d);
        const double one_y = 1.0 + y;
        return y * (y * d + d + 2.0) * e / (one_y * (one_y * one_y - e));
      },
      1, 0.5 * tol, deriv_opts);
  QuadratureEstimate sum;
  sum.value = logs.value - derivs.value;
  sum.abs_error_estimate = logs.abs_error_estimate + derivs.abs_error_estimate;
  sum.evaluations = std::max(logs.evaluations, derivs.evaluations);
  sum.converged = logs.converged && derivs.converged;

  EntropyValue out;
  out.method = include_zero_mode ? EntropyMethod::lifshitz : EntropyMethod::lifshitz_no_zero_mode;
  out.point = p;
  out.cutoff_lambda = cutoff_lambda;
  out.value = sum.value;
  if (include_zero_mode) {
    out.value += -0.5 * std::log(kTwoPi * t * (d + 2.0) / cutoff_lambda) - 0.5;
  }
  out.estimate = sum;
  out.estimate.value = out.value;
  return out;
}

double entropy_lifshitz_temperature_slope(const DimensionlessPoint& p, double cutoff_lambda,
                                          double delta, bool include_zero_mode) {
  p.validate();
  if (!(delta > 0.0)) throw std::domain_error("finite-difference step must be > 0");
  if (!(p.temperature - delta > 0.0)) {
    throw std::domain_error("finite-difference step must be smaller than T");
  }
  const DimensionlessPoint up{p.d, p.temperature + delta};
  const DimensionlessPoint down{p.d, p.temperature - delta};
  const double s_up = entropy_lifshitz(up, cutoff_lambda, include_zero_mode).value;
  const double s_down = entropy_lifshitz(down, cutoff_lambda, include_zero_mode).value;
  return (s_up - s_down) / (2.0 * delta);
}

}  // namespace casimir1d
