#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <casimir1d/forces.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oracles/oracles.hpp"

using namespace casimir1d;

namespace {

// 30-digit evaluations of the zero-temperature force (both formulas agree
// to 20 digits at these separations).
const std::vector<std::pair<double, double>> kZeroT = {
    {0.2, -0.079590483224511705132},     {0.5, -0.041798711504334962436},
    {1.0, -0.022306939637396287353},     {2.0, -0.010257491980587474574},
    {5.0, -0.0028780122522149450191},    {10.0, -0.00093348335185337349976},
    {50.0, -0.000048484981189226148201},
};

}  // namespace

TEST_CASE("zero temperature: both methods against reference values") {
  for (auto [d, ref] : kZeroT) {
    CAPTURE(d);
    const auto c = force_zero_t_canonical(d);
    const auto l = force_zero_t_lifshitz(d);
    CHECK(c.estimate.converged);
    CHECK(l.estimate.converged);
    CHECK(std::abs(c.value - ref) <= 1e-10);
    CHECK(std::abs(l.value - ref) <= 1e-12);
    CHECK(std::abs(c.value - l.value) <= 1e-6 * std::abs(l.value));
    REQUIRE(c.tail.has_value());
    CHECK(c.tail->consistent);
  }
}

TEST_CASE("zero temperature: brute-force oracles") {
  CHECK(std::abs(force_zero_t_lifshitz(1.0).value - oracle::lifshitz_zero_t_brute(1.0, 400)) <=
        1e-13);
  CHECK(std::abs(force_zero_t_canonical(1.0).value - oracle::canonical_force_brute(1, 0, 8000)) <=
        1e-10);
}

TEST_CASE("strong coupling: approach to pi / (24 (d+2)^2)") {
  const double d = 50;
  const double f = force_zero_t_lifshitz(d).value;
  CHECK(f == doctest::Approx(-std::numbers::pi / (24 * (d + 2) * (d + 2))).epsilon(1e-2));
}

TEST_CASE("zero temperature: vanishing at large separation") {
  const auto c = force_zero_t_canonical(1e4);
  CHECK(c.estimate.converged);
  CHECK(c.value < 0);
  CHECK(std::abs(c.value) < 1e-7);
  const auto l = force_zero_t_lifshitz(1e4);
  CHECK(std::abs(l.value) < 1e-7);
  CHECK(std::abs(c.value - l.value) <= 1e-6 * std::abs(l.value));
}

TEST_CASE("Lifshitz integrand is regular at zero frequency") {
  for (double d : {0.1, 1.0, 30.0}) {
    CHECK(lifshitz_zero_t_integrand(0.0, d) == doctest::Approx(1.0 / (d + 2)));
    CHECK(lifshitz_zero_t_integrand(1e-12, d) == doctest::Approx(1.0 / (d + 2)).epsilon(1e-9));
  }
  CHECK(lifshitz_zero_t_integrand(1e3, 5.0) >= 0.0);
}

TEST_CASE("finite temperature canonical at (1, 1) against brute force") {
  const auto c = force_finite_t_canonical({1.0, 1.0});
  CHECK(c.estimate.converged);
  CHECK(std::abs(c.value - oracle::canonical_force_brute(1, 1, 8000)) <= 1e-10);
  CHECK(c.value == doctest::Approx(-0.0944869222).epsilon(1e-8));
}

TEST_CASE("finite temperature Lifshitz at (1, 1)") {
  ForceOptions tight;
  tight.tol = 1e-17;
  const auto l = force_finite_t_lifshitz({1.0, 1.0}, tight);
  CHECK(l.estimate.converged);
  CHECK(std::abs(force_finite_t_lifshitz({1.0, 1.0}).value - l.value) <= 1e-10);
  // zero mode contributes -T / (2 (d + 2)) = -1/6
  CHECK(l.value == doctest::Approx(-0.16666690477682224739).epsilon(1e-14));
  CHECK(std::abs(l.value + 1.0 / 6.0 + 2.3811015558072264428e-7) <= 1e-16);
}

TEST_CASE("low-temperature limit approaches zero temperature") {
  const double f0 = force_zero_t_canonical(1.0).value;
  const double ft = force_finite_t_canonical({1.0, 1e-4}).value;
  CHECK(std::abs(ft - f0) <= 1e-3 * std::abs(f0));
  CHECK(force_finite_t_canonical({1.0, 0.0}).value == f0);
  CHECK(force_finite_t_lifshitz({1.0, 0.0}).value == force_zero_t_lifshitz(1.0).value);
}

TEST_CASE("long-distance asymptotics") {
  const DimensionlessPoint p{200, 2};
  const double fc = force(p, Method::canonical).value;
  const double fl = force(p, Method::lifshitz).value;
  CHECK(fc == doctest::Approx(-0.0025).epsilon(1e-2));
  CHECK(fl == doctest::Approx(-0.005).epsilon(1e-2));
  CHECK(fl / fc >= 1.98);
  CHECK(fl / fc <= 2.02);
  CHECK(asymptotic_force({100, 2}, Method::lifshitz) == doctest::Approx(-0.01));
  CHECK(asymptotic_force({100, 2}, Method::canonical) == doctest::Approx(-0.005));
  CHECK(asymptotic_force({3.7, 0.4}, Method::lifshitz) /
            asymptotic_force({3.7, 0.4}, Method::canonical) ==
        doctest::Approx(2.0));
}

TEST_CASE("attraction, ordering and monotone decay") {
  const std::vector<double> ds = {0.1, 0.3, 1, 3, 10, 30, 100, 1000};
  for (double t : {0.0, 0.1, 1.0, 10.0}) {
    double prev_c = HUGE_VAL, prev_l = HUGE_VAL;
    for (double d : ds) {
      CAPTURE(d);
      CAPTURE(t);
      const auto c = force({d, t}, Method::canonical);
      const auto l = force({d, t}, Method::lifshitz);
      CHECK(c.estimate.converged);
      CHECK(l.estimate.converged);
      CHECK(c.value < 0);
      CHECK(l.value < 0);
      if (t > 0) CHECK(std::abs(c.value) <= std::abs(l.value));
      CHECK(std::abs(c.value) < prev_c);
      CHECK(std::abs(l.value) < prev_l);
      prev_c = std::abs(c.value);
      prev_l = std::abs(l.value);
    }
  }
}

TEST_CASE("Lifshitz force magnitude grows with temperature") {
  double prev = 0;
  for (double t : {0.01, 0.1, 1.0, 10.0}) {
    const double f = std::abs(force_finite_t_lifshitz({1.0, t}).value);
    CHECK(f > prev);
    prev = f;
  }
}

TEST_CASE("free energy") {
  const auto e = free_energy_lifshitz({1.0, 1.0}, 100.0);
  CHECK(e.value == doctest::Approx(-0.83434043440350423933).epsilon(1e-13));
  CHECK(e.cutoff_lambda == 100.0);

  const double t = 1.0, d = 1.0;
  const double sum = oracle::direct_sum(
      [&](long double n) {
        const long double y = 4 * std::numbers::pi_v<long double> * n * t;
        return t * std::log1p(-std::exp(-y * d) / ((1 + y) * (1 + y)));
      },
      10000);
  CHECK(std::abs(e.value - (sum + 0.5 * t * std::log(2 * std::numbers::pi * t * (d + 2) / 100))) <=
        1e-14);
}

TEST_CASE("free energy cutoff shift and force independence") {
  for (double t : {0.3, 1.0, 4.0}) {
    const DimensionlessPoint p{2.0, t};
    const double a = free_energy_lifshitz(p, 100).value;
    const double b = free_energy_lifshitz(p, 1e4).value;
    CHECK(b - a == doctest::Approx(-0.5 * t * std::log(100.0)).epsilon(1e-12));
  }
  // the free energy decreases without bound as the cutoff grows
  CHECK(free_energy_lifshitz({1, 1}, 1e300).value < -300);
}

TEST_CASE("Lifshitz force is minus the separation derivative of the free energy") {
  for (auto [d, t] : {std::pair{0.5, 0.2}, {1.0, 1.0}, {3.0, 0.05}}) {
    const double h = 1e-4;
    const double fd = -(free_energy_lifshitz({d + h, t}, 100).value -
                        free_energy_lifshitz({d - h, t}, 100).value) /
                      (2 * h);
    CHECK(force_finite_t_lifshitz({d, t}).value == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("free energy at large separation reduces to the zero mode") {
  const double t = 0.5, lam = 100;
  const double d = 1e3;
  const double zero_mode = 0.5 * t * std::log(2 * std::numbers::pi * t * (d + 2) / lam);
  CHECK(std::abs(free_energy_lifshitz({d, t}, lam).value - zero_mode) < 1e-300 + 1e-15);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(force_zero_t_canonical(0.0), std::domain_error);
  CHECK_THROWS_AS(force_zero_t_lifshitz(-1.0), std::domain_error);
  CHECK_THROWS_AS(force({1.0, -1.0}, Method::canonical), std::domain_error);
  CHECK_THROWS_AS(free_energy_lifshitz({1.0, 1.0}, 0.0), std::domain_error);
  CHECK_THROWS_AS(free_energy_lifshitz({1.0, 0.0}, 100.0), std::domain_error);
}
