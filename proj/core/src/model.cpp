#include "casimir1d/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace casimir1d {

namespace {

void require_positive(double x, const char* name) {
  if (!(std::isfinite(x) && x > 0.0)) {
    throw std::domain_error(std::string(name) + " must be finite and > 0");
  }
}

}  // namespace

void PhysicalParams::validate() const {
  require_positive(separation, "separation");
  require_positive(barrier_strength, "barrier strength");
  require_positive(speed, "propagation speed");
  require_positive(hbar, "hbar");
  if (!(std::isfinite(temperature) && temperature >= 0.0)) {
    throw std::domain_error("temperature must be finite and >= 0");
  }
}

void DimensionlessPoint::validate() const {
  require_positive(d, "reduced separation d");
  if (!(std::isfinite(temperature) && temperature >= 0.0)) {
    throw std::domain_error("reduced temperature must be finite and >= 0");
  }
}

DimensionlessPoint to_dimensionless(const PhysicalParams& p) {
  p.validate();
  const double v = p.speed;
  return {p.barrier_strength * p.separation / (v * v),
          v * p.temperature / (p.hbar * p.barrier_strength)};
}

double from_dimensionless_force(double reduced_force, const PhysicalParams& p) {
  p.validate();
  const double g = p.barrier_strength;
  const double v = p.speed;
  return reduced_force * p.hbar * g * g / (v * v * v);
}

double from_dimensionless_free_energy(double reduced_energy, const PhysicalParams& p) {
  p.validate();
  return reduced_energy * p.hbar * p.barrier_strength / p.speed;
}

std::string_view to_string(Method m) {
  return m == Method::canonical ? "canonical" : "lifshitz";
}

Method method_from_string(std::string_view s) {
  if (s == "canonical") return Method::canonical;
  if (s == "lifshitz") return Method::lifshitz;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

std::string_view to_string(ForceScale s) {
  switch (s) {
    case ForceScale::raw_dimensionless: return "raw";
    case ForceScale::fig1_scale: return "fig1";
    case ForceScale::fig2_scale: return "fig2";
  }
  return "raw";
}

ForceScale force_scale_from_string(std::string_view s) {
  if (s == "raw") return ForceScale::raw_dimensionless;
  if (s == "fig1") return ForceScale::fig1_scale;
  if (s == "fig2") return ForceScale::fig2_scale;
  throw std::invalid_argument("unknown units '" + std::string(s) + "' (raw|fig1|fig2)");
}

double apply_force_scale(double reduced_force, ForceScale scale) {
  switch (scale) {
    case ForceScale::raw_dimensionless: return reduced_force;
    case ForceScale::fig1_scale: return -reduced_force;
    case ForceScale::fig2_scale: return -4.0 * std::numbers::pi * reduced_force;
  }
  return reduced_force;
}

}  // namespace casimir1d
