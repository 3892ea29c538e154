// Scattering amplitudes of a scalar mode off two identical delta barriers.
//
// In reduced units the barriers sit at x = -d/2 and x = +d/2, the mode is
// e^{iqx}, and the matching condition at each barrier is
//   phi continuous,  phi'(x+) - phi'(x-) = phi(x).
// For a wave incident from the left,
//   x < -d/2        : e^{iqx} + B e^{-iqx}
//   -d/2 < x < d/2  : C e^{iqx} + D e^{-iqx}
//   x > d/2         : G e^{iqx}
// (the right-incident problem is the mirror image and shares C and D).

#pragma once

#include <complex>
#include <stdexcept>

namespace casimir1d {

struct ScatteringCoefficients {
  std::complex<double> B, C, D, G;

  /// |B|^2 + |G|^2, equal to 1 for a lossless barrier pair.
  double unitarity() const { return std::norm(B) + std::norm(G); }
  /// |C|^2 - |D|^2 - |G|^2, equal to 0 by flux continuity.
  double flux_residual() const { return std::norm(C) - std::norm(D) - std::norm(G); }
};

struct KernelValue {
  double value;  // |C|^2 + |D|^2 - 1
  double q;
  double d;
};

enum class Incidence { from_left, from_right };

/// Raised when the boundary-matching matrix is numerically singular.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed-form amplitudes.  All four share the denominator
/// (2q+i)^2 + e^{2idq}, evaluated without cancellation at small q.
/// Requires q > 0 and d > 0 (std::domain_error otherwise).
ScatteringCoefficients coefficients_closed_form(double q, double d);

/// Solves the 4x4 matching system directly.  For right incidence the
/// returned B, C, D, G follow the mirrored convention (G_{-k} is the
/// amplitude transmitted to x < -d/2, C_{-k} multiplies e^{-iqx}).
ScatteringCoefficients coefficients_linear_solve(double q, double d,
                                                 Incidence incidence = Incidence::from_left);

/// Force kernel K(q, d) = |C|^2 + |D|^2 - 1 = 8q^2(1+2q^2)/W - 1 with
/// W = |1 - e^{2idq}(1+2iq)^2|^2, evaluated from the real expanded form.
/// q = 0 returns the limit 2/(d+2)^2 - 1.
KernelValue kernel(double q, double d);

/// Same as kernel(q, d).value without argument checks; used inside integrands.
double kernel_unchecked(double q, double d) noexcept;

/// K computed as |C|^2 + |D|^2 - 1 from complex closed-form coefficients.
double kernel_from_coefficients(double q, double d);

}  // namespace casimir1d
