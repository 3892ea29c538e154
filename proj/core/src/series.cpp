#include "casimir1d/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace casimir1d {

QuadratureEstimate sum_exponential_series(const std::function<double(std::size_t)>& term,
                                          std::size_t n_start, double tol,
                                          const SeriesOptions& opts) {
  if (!(tol > 0.0)) throw std::domain_error("sum_exponential_series: tol must be > 0");
  if (opts.ratio_bound && !(*opts.ratio_bound >= 0.0 && *opts.ratio_bound < 1.0)) {
    throw std::domain_error("sum_exponential_series: ratio_bound must lie in [0, 1)");
  }

  QuadratureEstimate out;
  double sum = 0.0;
  double comp = 0.0;  // Neumaier compensation
  double previous = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < opts.max_terms; ++i) {
    const std::size_t n = n_start + i;
    const double t = term(n);
    if (!std::isfinite(t)) break;
    const double s = sum + t;
    comp += (std::abs(sum) >= std::abs(t)) ? (sum - s) + t : (t - s) + sum;
    sum = s;
    out.evaluations = n;

    const double mag = std::abs(t);
    double remainder = std::numeric_limits<double>::infinity();
    if (mag == 0.0) {
      remainder = 0.0;
    } else if (opts.ratio_bound) {
      remainder = mag * *opts.ratio_bound / (1.0 - *opts.ratio_bound);
    } else if (opts.tail_ratio_bound) {
      const double r = opts.tail_ratio_bound(n);
      if (r < 1.0) remainder = mag * r / (1.0 - r);
    } else if (std::isfinite(previous) && previous > 0.0) {
      const double r = mag / previous;
      if (r < 1.0) remainder = mag * r / (1.0 - r);
    }
    previous = mag;
    if (remainder <= tol) {
      out.value = sum + comp;
      out.abs_error_estimate = remainder;
      out.converged = true;
      return out;
    }
  }
  out.value = sum + comp;
  out.abs_error_estimate = std::numeric_limits<double>::infinity();
  out.converged = false;
  return out;
}

}  // namespace casimir1d
