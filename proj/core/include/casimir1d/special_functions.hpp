#pragma once

namespace casimir1d {

/// Cosine integral Ci(x) = -int_x^inf cos(t)/t dt for x > 0.
/// Power series below x = 2, continued fraction for E1(ix) above.
double cosine_integral(double x);

/// Bose enhancement 1 / (1 - exp(-q / T)) for q > 0, T > 0.
double bose_factor(double q, double temperature);

/// q / (1 - exp(-q / T)); finite at q = 0 where it equals T.
double bose_weighted_momentum(double q, double temperature) noexcept;

/// (u / sinh u)^2 with u = q / (2T); 1 at q = 0, 4 u^2 e^{-2u} for large u.
double thermal_weight(double q, double temperature);

/// As thermal_weight, without argument checks (q >= 0, T > 0 assumed).
double thermal_weight_unchecked(double q, double temperature) noexcept;

}  // namespace casimir1d
