// Quadrature engines: global-adaptive Gauss-Kronrod, semi-infinite smooth
// integrals, and oscillatory semi-infinite integrals with accelerated tails.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>

namespace casimir1d {

using Integrand = std::function<double(double)>;

struct QuadratureEstimate {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

struct AdaptiveOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  /// Hard cap on the number of live subintervals.  Hitting it yields
  /// converged = false rather than a silently truncated answer.
  std::size_t max_intervals = 400000;
  /// The interval is first split into this many equal panels.
  std::size_t initial_panels = 1;
};

/// 21-point Gauss-Kronrod rule on [a, b]; error estimate as in QUADPACK.
QuadratureEstimate gauss_kronrod21(const Integrand& f, double a, double b);

/// Global adaptive bisection driven by the largest local error.
/// Converged when the summed error estimate is <= max(abs_tol, rel_tol |I|).
QuadratureEstimate integrate_adaptive(const Integrand& f, double a, double b,
                                      const AdaptiveOptions& opts = {});

/// Integral over [0, inf) of a function decaying like exp(-x / decay_scale),
/// by the map x = s t / (1 - t) onto [0, 1).
QuadratureEstimate integrate_smooth_semi_infinite(const Integrand& f, double decay_scale,
                                                  double tol,
                                                  std::size_t max_intervals = 200000);

struct OscillatorySpec {
  /// omega in the asymptotic form A cos(omega q) / q.
  double angular_rate = 1.0;
  /// Start of the tail treatment; 0 selects max(10, 4 pi / omega).  The
  /// value actually used is moved up to the next zero of cos(omega q).
  double switch_point = 0.0;
  std::size_t max_half_periods = 4000;
  /// A in A cos(omega q) / q.  When set, the tail is also computed as
  /// -A Ci(omega Q) plus the accelerated tail of f - A cos(omega q) / q,
  /// and the two tail values must agree within their error estimates.
  std::optional<double> leading_amplitude;
  /// Head interval [0, Q] is pre-split into panels of at most this many
  /// half periods.
  double head_panel_half_periods = 1.0;
  std::size_t max_head_intervals = 600000;
};

/// Validates the spec (omega > 0, switch point >= one period when given).
void validate(const OscillatorySpec& spec);

/// Default switch point max(10, 4 pi / omega).
double default_switch_point(double angular_rate);

struct TailDiagnostics {
  double switch_point = 0.0;  // aligned Q actually used
  double head = 0.0;
  double head_error = 0.0;
  double tail = 0.0;
  double tail_error = 0.0;
  std::size_t half_periods = 0;
  bool has_cross_check = false;
  double cross_check_tail = 0.0;
  double cross_check_error = 0.0;
  bool consistent = true;
};

struct OscillatoryEstimate {
  QuadratureEstimate estimate;
  TailDiagnostics tail;
};

/// Integral over [0, inf) of f, where f ~ A cos(omega q)/q + O(1/q^2) past
/// the switch point.  Head: adaptive quadrature on [0, Q].  Tail:
/// half-period panel integrals whose partial sums are extrapolated with
/// Wynn's epsilon algorithm.
OscillatoryEstimate integrate_oscillatory_tail(const Integrand& f, const OscillatorySpec& spec,
                                               double tol);

/// Wynn epsilon extrapolation of a sequence of partial sums.  Returns the
/// highest even-order entry reachable from the end of the sequence.
double wynn_epsilon(std::span<const double> partial_sums);

}  // namespace casimir1d
