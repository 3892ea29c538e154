// Casimir entropy.
//
// Canonical: S_C(d, T) = int_d^Lambda s(x, T) dx with the entropy density
//   s(x, T) = -dF_C/dT = (1/2pi) int_0^inf (u csch u)^2 [1 - 8q^2(1+2q^2)/W(q,x)] dq,
//   u = q / (2T).
// The distance integral diverges logarithmically (s ~ 1/(4x)), so every
// value carries the infrared cutoff Lambda it was computed with.
//
// Lifshitz: closed Matsubara expression, with or without the zero-frequency
// term.  Keeping it makes S_L diverge as T -> 0; dropping it makes S_L
// negative.

#pragma once

#include "casimir1d/model.hpp"
#include "casimir1d/quadrature.hpp"

#include <cstddef>
#include <string_view>

namespace casimir1d {

enum class EntropyMethod { canonical, lifshitz, lifshitz_no_zero_mode };

std::string_view to_string(EntropyMethod m);

inline constexpr double kDefaultCutoffLambda = 100.0;

struct EntropyOptions {
  double tol = 1e-8;  // absolute, on the entropy
  /// Upper momentum limit of the density integral, in units of T.
  double qmax_over_t = 40.0;
  /// Log-spaced panels of the distance integral, evaluated independently.
  std::size_t outer_panels = 8;
  /// Worker threads for the outer panels; 1 is strictly serial.
  std::size_t jobs = 1;
};

struct EntropyDensity {
  double value = 0.0;
  double dtilde = 0.0;
  double temperature = 0.0;
  QuadratureEstimate estimate;
};

struct EntropyValue {
  double value = 0.0;
  EntropyMethod method = EntropyMethod::canonical;
  DimensionlessPoint point;
  double cutoff_lambda = kDefaultCutoffLambda;
  QuadratureEstimate estimate;
};

/// -dF_C/dT at separation dtilde.  `tol` is absolute.
EntropyDensity entropy_density_canonical(double dtilde, double temperature, double tol = 1e-10,
                                         double qmax_over_t = 40.0);

/// Canonical entropy with infrared cutoff Lambda > d.
EntropyValue entropy_canonical(const DimensionlessPoint& p,
                               double cutoff_lambda = kDefaultCutoffLambda,
                               const EntropyOptions& opts = {});

/// Lifshitz entropy.  The zero-mode part is
///   -(1/2) log[2 pi T (d+2) / Lambda] - 1/2.
EntropyValue entropy_lifshitz(const DimensionlessPoint& p,
                              double cutoff_lambda = kDefaultCutoffLambda,
                              bool include_zero_mode = true, double tol = 1e-15);

/// Central difference of entropy_lifshitz in T with step delta.
double entropy_lifshitz_temperature_slope(const DimensionlessPoint& p, double cutoff_lambda,
                                          double delta, bool include_zero_mode = true);

}  // namespace casimir1d
