// Acceptance checks.  Prints one PASS/FAIL line per criterion; exit status is
// nonzero if any selected criterion fails.
//
//   acceptance                 run all criteria
//   acceptance --criterion 7   run one

#include <casimir1d/casimir1d.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "support/closed_forms.hpp"
#include "support/generators.hpp"

using namespace casimir1d;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0: no runtime requirement
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome zero_t_equivalence() {
  double worst = 0;
  bool converged = true;
  for (double d : {0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const auto c = force_zero_t_canonical(d);
    const auto l = force_zero_t_lifshitz(d);
    converged = converged && c.estimate.converged && l.estimate.converged;
    worst = std::max(worst, std::abs(c.value - l.value) / std::abs(l.value));
  }
  return {converged && worst <= 1e-6, fmt("max |F_C - F_L|/|F_L| = %.3e (limit 1e-6)", worst)};
}

Outcome strong_coupling_limit() {
  const double d = 50;
  const auto l = force_zero_t_lifshitz(d);
  const double scaled = l.value * 24 * d * d / std::numbers::pi;
  const double shifted = l.value * 24 * (d + 2) * (d + 2) / std::numbers::pi;
  return {l.estimate.converged && std::abs(scaled + 1) <= 1e-3,
          fmt("F_L(50) = %.12e, F_L*24d^2/pi = %.6f (target -1 +- 1e-3); "
              "with (d+2)^2 in place of d^2: %.6f",
              l.value, scaled, shifted)};
}

Outcome long_distance_asymptotics() {
  const DimensionlessPoint p{200, 2};
  const auto c = force(p, Method::canonical);
  const auto l = force(p, Method::lifshitz);
  const double target = -p.temperature / (4 * p.d);
  const double rel = std::abs(c.value / target - 1);
  const double ratio = l.value / c.value;
  const bool ok = c.estimate.converged && l.estimate.converged && rel <= 0.01 && ratio >= 1.98 &&
                  ratio <= 2.02;
  return {ok, fmt("F_C = %.8e (vs -T/4d: %.3f%%), F_L/F_C = %.6f", c.value, 100 * rel, ratio)};
}

Outcome scattering_identities() {
  gen::Source src(20240611);
  double unit = 0, flux = 0, paths = 0;
  for (int i = 0; i < 10000; ++i) {
    const double q = src.positive_up_to(100.0);
    const double d = src.positive_up_to(50.0);
    const auto a = coefficients_closed_form(q, d);
    const auto b = coefficients_linear_solve(q, d);
    unit = std::max(unit, std::abs(a.unitarity() - 1));
    flux = std::max(flux, std::abs(a.flux_residual()));
    paths = std::max({paths, std::abs(a.B - b.B), std::abs(a.C - b.C), std::abs(a.D - b.D),
                      std::abs(a.G - b.G)});
  }
  return {unit <= 1e-12 && flux <= 1e-12 && paths <= 1e-12,
          fmt("10^4 points: unitarity %.2e, flux %.2e, closed vs solve %.2e (limit 1e-12)", unit,
              flux, paths)};
}

Outcome long_wavelength_limits() {
  double worst = 0;
  for (double d : {0.5, 1.0, 10.0}) {
    const auto c = coefficients_closed_form(1e-6, d);
    worst = std::max({worst, std::abs(c.C - 1 / (d + 2)), std::abs(c.D + 1 / (d + 2))});
  }
  return {worst <= 1e-5, fmt("max deviation from +-1/(d+2) at q = 1e-6: %.3e (limit 1e-5)", worst)};
}

Outcome kernel_identity() {
  gen::Source src(20240611);
  double worst = 0, worst_literal = 0;
  for (int i = 0; i < 10000; ++i) {
    const double q = src.positive_up_to(100.0);
    const double d = src.positive_up_to(50.0);
    const double complex_k = kernel_from_coefficients(q, d);
    worst = std::max(worst, std::abs(complex_k - kernel(q, d).value));
    const double a = 1 + 4 * q * q;
    const double w = 1 + a * a - 2 * (1 - 4 * q * q) * std::cos(2 * d * q) +
                     8 * q * std::sin(2 * d * q);
    worst_literal = std::max(worst_literal, std::abs(complex_k - (8 * q * q * (1 + 2 * q * q) / w - 1)));
  }
  return {worst <= 1e-12,
          fmt("complex vs real form: %.2e (limit 1e-12); unrearranged real form: %.2e", worst,
              worst_literal)};
}

Outcome entropy_positivity_monotonicity() {
  const double ds[] = {0.5, 1, 2, 5};
  const double ts[] = {0.25, 0.5, 1, 2};
  bool ok = true;
  int resolved = 0, pairs = 0;
  double min_s = HUGE_VAL;
  std::string worst;
  for (double d : ds) {
    EntropyValue prev;
    for (std::size_t k = 0; k < 4; ++k) {
      const auto s = entropy_canonical({d, ts[k]}, 100);
      ok = ok && s.estimate.converged && s.value >= 0;
      min_s = std::min(min_s, s.value);
      if (k > 0) {
        ++pairs;
        const double diff = s.value - prev.value;
        const double noise = s.estimate.abs_error_estimate + prev.estimate.abs_error_estimate;
        if (diff > noise) ++resolved;
        if (diff < -noise) {
          ok = false;
          worst += fmt(" decrease at d=%g T=%g->%g by %.2e;", d, ts[k - 1], ts[k], diff);
        }
      }
      prev = s;
    }
  }
  return {ok, fmt("min S_C = %.6f; %d/%d temperature steps increase beyond the error estimate, "
                  "the rest are flat within it%s",
                  min_s, resolved, pairs, worst.c_str())};
}

Outcome third_law() {
  const auto cold = entropy_canonical({1, 0.01}, 100);
  const auto warm = entropy_canonical({1, 1}, 100);
  const double ratio = cold.value / warm.value;
  return {cold.estimate.converged && warm.estimate.converged && cold.value <= 0.05 * warm.value,
          fmt("S_C(T=0.01) = %.9f, S_C(T=1) = %.9f, ratio %.4f (limit 0.05)", cold.value,
              warm.value, ratio)};
}

Outcome entropy_density_tail() {
  bool ok = true;
  std::string detail;
  for (double t : {1.0, 2.0}) {
    const auto e = entropy_density_canonical(100, t);
    const double rel = e.value * 400 - 1;
    ok = ok && e.estimate.converged && std::abs(rel) <= 0.02;
    detail += fmt("T=%g: %.6e (%+.2f%%) ", t, e.value, 100 * rel);
  }
  return {ok, detail + "vs 1/400, limit 2%"};
}

Outcome lifshitz_entropy_dilemma() {
  const double s1 = entropy_lifshitz({1, 0.1}, 100).value;
  const double s2 = entropy_lifshitz({1, 0.01}, 100).value;
  const double s3 = entropy_lifshitz({1, 0.001}, 100).value;
  const double nz = entropy_lifshitz({5, 1}, 100, false).value;
  const double slope = entropy_lifshitz_temperature_slope({100, 1}, 100, 1e-3);
  const bool ok = s1 < s2 && s2 < s3 && nz < 0 && std::abs(slope / -0.5 - 1) <= 0.1;
  return {ok, fmt("S_L(T=0.1,0.01,0.001) = %.6f, %.6f, %.6f; no zero mode S_L(5,1) = %.4e; "
                  "slope at d=100 = %.6f (target -0.5)",
                  s1, s2, s3, nz, slope)};
}

Outcome maxwell_relation() {
  const double delta = 1e-4;
  double worst = 0;
  for (double d : {1.0, 10.0}) {
    for (double t : {0.5, 2.0}) {
      const double fd = -(force_finite_t_canonical({d, t + delta}).value -
                          force_finite_t_canonical({d, t - delta}).value) /
                        (2 * delta);
      worst = std::max(worst, std::abs(entropy_density_canonical(d, t).value - fd));
    }
  }
  return {worst <= 1e-4, fmt("max |density - finite difference| = %.3e (limit 1e-4)", worst)};
}

Outcome quadrature_error_honesty() {
  const auto cases = closed_forms::suite();
  bool ok = cases.size() == 20;
  int converged = 0, runs = 0;
  double worst_ratio = 0;
  std::string bad;
  for (double tol : {1e-6, 1e-10}) {
    for (const auto& c : cases) {
      ++runs;
      const auto r = closed_forms::run(c, tol);
      if (!r.converged) continue;
      ++converged;
      const double err = std::abs(r.value - c.exact);
      const double ratio = r.abs_error_estimate > 0 ? err / r.abs_error_estimate
                                                    : (err == 0 ? 0.0 : HUGE_VAL);
      worst_ratio = std::max(worst_ratio, ratio);
      if (ratio > 10) {
        ok = false;
        bad += " " + c.name;
      }
    }
  }
  return {ok, fmt("%d/%d runs converged; max true/estimated error = %.3f (limit 10)%s", converged,
                  runs, worst_ratio, bad.c_str())};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "zero-temperature method equivalence", 10, zero_t_equivalence},
      {2, "strong-coupling limit", 1, strong_coupling_limit},
      {3, "long-distance asymptotics", 30, long_distance_asymptotics},
      {4, "scattering identities", 0, scattering_identities},
      {5, "long-wavelength limits", 0, long_wavelength_limits},
      {6, "kernel algebraic identity", 0, kernel_identity},
      {7, "entropy positivity and temperature monotonicity", 300, entropy_positivity_monotonicity},
      {8, "third law", 0, third_law},
      {9, "universal entropy-density tail", 0, entropy_density_tail},
      {10, "Lifshitz entropy dilemma", 0, lifshitz_entropy_dilemma},
      {11, "Maxwell-relation consistency", 0, maxwell_relation},
      {12, "quadrature error honesty", 0, quadrature_error_honesty},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }

  int failures = 0, ran = 0;
  for (const auto& c : all) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += fmt(" [runtime %.2f s over budget %.0f s]", secs, c.budget_seconds);
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no such criterion: %d\n", only);
    return 2;
  }
  if (only == 0) std::printf("%d/%d criteria passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}
