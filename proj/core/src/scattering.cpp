#include "casimir1d/scattering.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>

namespace casimir1d {

namespace {

using cplx = std::complex<double>;
constexpr cplx I{0.0, 1.0};

void check_args(double q, double d) {
  if (!(std::isfinite(q) && q > 0.0)) throw std::domain_error("q must be finite and > 0");
  if (!(std::isfinite(d) && d > 0.0)) throw std::domain_error("d must be finite and > 0");
}

// (2q+i)^2 + e^{2idq} = 4q^2 - 2 sin^2(dq) + i (4q + sin 2dq)
cplx denominator(double q, double d) {
  const double s = std::sin(d * q);
  const double c = std::cos(d * q);
  return {4.0 * q * q - 2.0 * s * s, 4.0 * q + 2.0 * s * c};
}

}  // namespace

ScatteringCoefficients coefficients_closed_form(double q, double d) {
  check_args(q, d);
  const cplx den = denominator(q, d);
  const double s = std::sin(d * q);
  const double c = std::cos(d * q);
  const cplx phase{c, s};  // e^{idq}

  ScatteringCoefficients out;
  out.C = 2.0 * q * cplx(2.0 * q, 1.0) / den;
  out.D = -2.0 * I * phase * q / den;
  out.G = 4.0 * q * q / den;
  out.B = -2.0 * I * (s + 2.0 * q * c) / den;
  return out;
}

ScatteringCoefficients coefficients_linear_solve(double q, double d, Incidence incidence) {
  check_args(q, d);
  // Unknowns x = (B, C, D, G).
  const double h = 0.5 * d;
  const cplx em = std::exp(-I * q * h);  // e^{-iqd/2}
  const cplx ep = std::exp(I * q * h);   // e^{+iqd/2}
  const cplx iq = I * q;

  Eigen::Matrix4cd a = Eigen::Matrix4cd::Zero();
  Eigen::Vector4cd rhs = Eigen::Vector4cd::Zero();

  if (incidence == Incidence::from_left) {
    // x = -d/2: e^- + B e^+ = C e^- + D e^+
    a(0, 0) = ep;
    a(0, 1) = -em;
    a(0, 2) = -ep;
    rhs(0) = -em;
    // x = -d/2: iq(C e^- - D e^+) - iq(e^- - B e^+) = C e^- + D e^+
    a(1, 0) = iq * ep;
    a(1, 1) = (iq - 1.0) * em;
    a(1, 2) = (-iq - 1.0) * ep;
    rhs(1) = iq * em;
    // x = +d/2: C e^+ + D e^- = G e^+
    a(2, 1) = ep;
    a(2, 2) = em;
    a(2, 3) = -ep;
    // x = +d/2: iq G e^+ - iq(C e^+ - D e^-) = G e^+
    a(3, 1) = -iq * ep;
    a(3, 2) = iq * em;
    a(3, 3) = (iq - 1.0) * ep;
  } else {
    // Region III: e^{-iqx} + B e^{iqx}; II: C e^{-iqx} + D e^{iqx}; I: G e^{-iqx}.
    // x = +d/2: C e^- + D e^+ = e^- + B e^+
    a(0, 0) = -ep;
    a(0, 1) = em;
    a(0, 2) = ep;
    rhs(0) = em;
    // x = +d/2: (-iq e^- + iq B e^+) - (-iq C e^- + iq D e^+) = C e^- + D e^+
    a(1, 0) = iq * ep;
    a(1, 1) = (iq - 1.0) * em;
    a(1, 2) = (-iq - 1.0) * ep;
    rhs(1) = iq * em;
    // x = -d/2: G e^+ = C e^+ + D e^-
    a(2, 1) = ep;
    a(2, 2) = em;
    a(2, 3) = -ep;
    // x = -d/2: (-iq C e^+ + iq D e^-) + iq G e^+ = G e^+
    a(3, 1) = -iq * ep;
    a(3, 2) = iq * em;
    a(3, 3) = (iq - 1.0) * ep;
  }

  Eigen::FullPivLU<Eigen::Matrix4cd> lu(a);
  lu.setThreshold(64.0 * std::numeric_limits<double>::epsilon());
  if (!lu.isInvertible()) {
    throw SingularSystemError("boundary-matching system is singular at q=" + std::to_string(q) +
                              ", d=" + std::to_string(d));
  }
  const Eigen::Vector4cd x = lu.solve(rhs);
  return {x(0), x(1), x(2), x(3)};
}

double kernel_unchecked(double q, double d) noexcept {
  // With t = sin(dq)/q (-> d as q -> 0) both numerator and denominator of
  //   K = [-4 sin^2(dq) - 8q^2 cos 2dq - 8q sin 2dq] / W
  // carry an exact q^2 factor, which is divided out.
  const double s = std::sin(d * q);
  const double c = std::cos(d * q);
  const double t = q > 0.0 ? s / q : d;
  const double q2 = q * q;
  const double cos2 = c * c - s * s;
  const double w_red = 16.0 + 16.0 * q2 + 4.0 * (1.0 - 4.0 * q2) * t * t + 16.0 * t * c;
  const double n_red = -4.0 * t * t - 8.0 * cos2 - 16.0 * t * c;
  return n_red / w_red;
}

KernelValue kernel(double q, double d) {
  if (!(std::isfinite(d) && d > 0.0)) throw std::domain_error("d must be finite and > 0");
  if (!(std::isfinite(q) && q >= 0.0)) throw std::domain_error("q must be finite and >= 0");
  if (q == 0.0) {
    const double r = 1.0 / (d + 2.0);
    return {2.0 * r * r - 1.0, q, d};
  }
  return {kernel_unchecked(q, d), q, d};
}

double kernel_from_coefficients(double q, double d) {
  const auto co = coefficients_closed_form(q, d);
  return std::norm(co.C) + std::norm(co.D) - 1.0;
}

}  // namespace casimir1d
