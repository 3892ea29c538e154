#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <casimir1d/series.hpp>

#include <cmath>
#include <numbers>

#include "oracles/oracles.hpp"

using namespace casimir1d;

TEST_CASE("geometric series") {
  for (double tol : {1e-8, 1e-14}) {
    const auto r = sum_exponential_series([](std::size_t n) { return std::ldexp(1.0, -int(n)); },
                                          1, tol);
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0) <= tol);
    CHECK(r.abs_error_estimate <= tol);
    CHECK(r.evaluations >= 1);
  }
}

TEST_CASE("zero series") {
  const auto r = sum_exponential_series([](std::size_t) { return 0.0; }, 1, 1e-12);
  CHECK(r.converged);
  CHECK(r.value == 0.0);
  CHECK(r.abs_error_estimate == 0.0);
}

TEST_CASE("Matsubara force sum at T = 1, d = 1 against direct summation") {
  const double t = 1.0, d = 1.0;
  const auto term = [&](std::size_t n) {
    const double y = 4 * std::numbers::pi * double(n) * t;
    return 4 * std::numbers::pi * double(n) * t * t / (std::exp(y * d) * (1 + y) * (1 + y) - 1);
  };
  const auto r = sum_exponential_series(term, 1, 1e-18);
  const double ref = oracle::direct_sum(
      [&](long double n) {
        const long double y = 4 * std::numbers::pi_v<long double> * n * t;
        return 4 * std::numbers::pi_v<long double> * n * t * t /
               (std::exp(y * d) * (1 + y) * (1 + y) - 1);
      },
      10000);
  CHECK(r.converged);
  CHECK(std::abs(r.value - ref) <= 1e-10 * ref);
  CHECK(r.value == doctest::Approx(2.3811015558072264428e-7).epsilon(1e-13));
}

TEST_CASE("slow geometric series with an explicit ratio bound") {
  SeriesOptions o;
  o.ratio_bound = 0.99;
  const auto r = sum_exponential_series([](std::size_t n) { return std::pow(0.99, double(n)); },
                                        0, 1e-10, o);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 100.0) <= 1e-9);
}

TEST_CASE("divergent series reports non-convergence") {
  SeriesOptions o;
  o.max_terms = 1000;
  const auto r = sum_exponential_series([](std::size_t n) { return 1.0 / double(n); }, 1, 1e-12, o);
  CHECK_FALSE(r.converged);
}
