#pragma once

#include "casimir1d/quadrature.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace casimir1d {

struct SeriesOptions {
  std::size_t max_terms = 10'000'000;
  /// Known bound r < 1 on |term(n+1) / term(n)| for the remaining terms.
  std::optional<double> ratio_bound;
  /// Index-dependent bound: tail_ratio_bound(N) >= |term(n+1) / term(n)| for
  /// every n >= N.  Values >= 1 mean no usable bound yet.
  std::function<double(std::size_t)> tail_ratio_bound;
  // With neither bound set the observed ratio of the last two terms is used,
  // which is only safe once the ratios are non-increasing.
};

/// Sums term(n) for n = n_start, n_start + 1, ... until the geometric
/// remainder estimate |t_n| r / (1 - r) drops to tol.  The result's
/// `evaluations` field holds the truncation index N (last n summed).
QuadratureEstimate sum_exponential_series(const std::function<double(std::size_t)>& term,
                                          std::size_t n_start, double tol,
                                          const SeriesOptions& opts = {});

}  // namespace casimir1d
