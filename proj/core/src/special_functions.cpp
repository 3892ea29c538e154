#include "casimir1d/special_functions.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace casimir1d {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double ci_series(double x) {
  // gamma + ln x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!)
  const double x2 = x * x;
  double term = 1.0;  // (-1)^k x^{2k} / (2k)!
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
    const double add = term / (2.0 * k);
    sum += add;
    if (std::abs(add) < 0.25 * kEps * std::abs(sum)) break;
  }
  return std::numbers::egamma + std::log(x) + sum;
}

double ci_continued_fraction(double x) {
  // Modified Lentz evaluation of E1(ix) e^{ix}; Ci(x) = -Re E1(ix).
  using cplx = std::complex<double>;
  constexpr double kFpMin = std::numeric_limits<double>::min() / kEps;
  cplx b{1.0, x};
  cplx c{1.0 / kFpMin, 0.0};
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 2; i < 100000; ++i) {
    const double a = -static_cast<double>((i - 1) * (i - 1));
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < kEps) break;
  }
  h *= cplx(std::cos(x), -std::sin(x));
  return -h.real();
}

}  // namespace

double cosine_integral(double x) {
  if (!(x > 0.0)) throw std::domain_error("cosine_integral: x must be > 0");
  if (std::isinf(x)) return 0.0;
  return x <= 2.0 ? ci_series(x) : ci_continued_fraction(x);
}

double bose_factor(double q, double temperature) {
  if (!(q > 0.0) || !(temperature > 0.0)) {
    throw std::domain_error("bose_factor: q and T must be > 0");
  }
  return -1.0 / std::expm1(-q / temperature);
}

double bose_weighted_momentum(double q, double temperature) noexcept {
  const double x = q / temperature;
  if (x == 0.0) return temperature;
  return -temperature * x / std::expm1(-x);
}

double thermal_weight_unchecked(double q, double temperature) noexcept {
  const double u = q / (2.0 * temperature);
  if (u < 1e-3) {
    const double v = u * u;
    return 1.0 - v * (1.0 / 3.0 - v * (1.0 / 15.0 - v * (2.0 / 189.0)));
  }
  // csch^2 u = 4 e^{-2u} / (1 - e^{-2u})^2
  const double m = std::expm1(-2.0 * u);
  return 4.0 * u * u * std::exp(-2.0 * u) / (m * m);
}

double thermal_weight(double q, double temperature) {
  if (!(q > 0.0) || !(temperature > 0.0)) {
    throw std::domain_error("thermal_weight: q and T must be > 0");
  }
  return thermal_weight_unchecked(q, temperature);
}

}  // namespace casimir1d
