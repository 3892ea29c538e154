// Casimir force between the two barriers, by canonical mode summation and
// by the Lifshitz (Matsubara) formula, in units of hbar gamma^2 / v^3.
// Negative values are attractive.

#pragma once

#include "casimir1d/model.hpp"
#include "casimir1d/quadrature.hpp"

#include <cstddef>
#include <optional>

namespace casimir1d {

/// Tail start used by the canonical force.  Below q ~ 100 the higher
/// harmonics of K in the phase 2dq leave a non-alternating panel remainder
/// that sequence extrapolation does not remove.
inline constexpr double kDefaultForceSwitchPoint = 100.0;

struct ForceOptions {
  double tol = 1e-10;  // absolute, on the reduced force
  /// Oscillatory tail start; 0 selects max(kDefaultForceSwitchPoint, 4 pi / (2d)).
  double switch_point = 0.0;
  std::size_t max_half_periods = 4000;
  /// Cross-check the accelerated tail against the Ci closed form of its
  /// leading term.
  bool tail_cross_check = true;
};

struct ForceValue {
  double value = 0.0;
  Method method = Method::canonical;
  DimensionlessPoint point;
  QuadratureEstimate estimate;
  std::optional<TailDiagnostics> tail;  // canonical only
};

struct FreeEnergyValue {
  double value = 0.0;  // units hbar gamma / v
  double cutoff_lambda = 0.0;
  DimensionlessPoint point;
  QuadratureEstimate estimate;
};

/// -(1/2pi) int_0^inf q [1 - 8q^2(1+2q^2)/W] dq, i.e. (1/2pi) int q K dq.
ForceValue force_zero_t_canonical(double d, const ForceOptions& opts = {});

/// -(1/4pi) int_0^inf z / (e^{dz}(1+z)^2 - 1) dz.
ForceValue force_zero_t_lifshitz(double d, const ForceOptions& opts = {});

/// Canonical force with the Bose factor q / (1 - e^{-q/T}).  T = 0 uses the
/// zero-temperature path.
ForceValue force_finite_t_canonical(const DimensionlessPoint& p, const ForceOptions& opts = {});

/// Matsubara sum over n >= 1 plus the zero-mode term T / (2(d+2)).
/// T = 0 uses the zero-temperature path.
ForceValue force_finite_t_lifshitz(const DimensionlessPoint& p, const ForceOptions& opts = {});

ForceValue force(const DimensionlessPoint& p, Method method, const ForceOptions& opts = {});

/// Regularised Lifshitz free energy with infrared cutoff Lambda:
///   T sum_{n>=1} log[1 - e^{-4 pi n T d} / (1 + 4 pi n T)^2]
///   + (T/2) log[2 pi T (d + 2) / Lambda].
FreeEnergyValue free_energy_lifshitz(const DimensionlessPoint& p, double cutoff_lambda,
                                     double tol = 1e-14);

/// Long-distance forms: -T/(2d) (Lifshitz), -T/(4d) (canonical).
double asymptotic_force(const DimensionlessPoint& p, Method method);

/// Integrands, exposed for oracles and benchmarks.
double canonical_force_integrand(double q, double d, double temperature) noexcept;
double lifshitz_zero_t_integrand(double zeta, double d) noexcept;

}  // namespace casimir1d
