// Physical and dimensionless parameters for the double-delta Casimir problem.
//
// Everything downstream works in the reduced variables
//   q = v^2 k / gamma,  d = gamma a / v^2,  T^ = v T / (hbar gamma)
// and forces carry the overall scale hbar gamma^2 / v^3.  Boltzmann's
// constant is 1 throughout.

#pragma once

#include <string_view>

namespace casimir1d {

/// Dimensional inputs.  hbar defaults to 1.
struct PhysicalParams {
  double separation = 1.0;        // a
  double barrier_strength = 1.0;  // gamma
  double speed = 1.0;             // v
  double temperature = 0.0;       // T (energy units, k_B = 1)
  double hbar = 1.0;

  /// Throws std::domain_error unless a, gamma, v, hbar > 0 and T >= 0.
  void validate() const;
};

/// Reduced separation d and reduced temperature T^.
struct DimensionlessPoint {
  double d = 1.0;
  double temperature = 0.0;

  /// Throws std::domain_error unless d > 0 and T^ >= 0 (both finite).
  void validate() const;

  friend bool operator==(const DimensionlessPoint&, const DimensionlessPoint&) = default;
};

DimensionlessPoint to_dimensionless(const PhysicalParams& p);

/// Reduced force -> physical force, i.e. multiplies by hbar gamma^2 / v^3.
double from_dimensionless_force(double reduced_force, const PhysicalParams& p);

/// Reduced free energy -> physical, multiplies by hbar gamma / v.
double from_dimensionless_free_energy(double reduced_energy, const PhysicalParams& p);

enum class Method { canonical, lifshitz };

std::string_view to_string(Method m);
/// Accepts "canonical" / "lifshitz"; throws std::invalid_argument otherwise.
Method method_from_string(std::string_view s);

/// Output normalisation for reduced forces.
///   raw_dimensionless : value in units of hbar gamma^2 / v^3 (negative = attraction)
///   fig1_scale        : value in units of -hbar gamma^2 / v^3
///   fig2_scale        : value in units of -hbar gamma^2 / (4 pi v^3)
enum class ForceScale { raw_dimensionless, fig1_scale, fig2_scale };

std::string_view to_string(ForceScale s);
ForceScale force_scale_from_string(std::string_view s);

/// Divides a reduced force by the unit implied by `scale`.
double apply_force_scale(double reduced_force, ForceScale scale);

}  // namespace casimir1d
