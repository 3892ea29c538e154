// Small seeded generators for property tests.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gen {

class Source {
 public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  /// Log-uniform on [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  /// Uniform on (0, hi], never returning exactly 0.
  double positive_up_to(double hi) {
    double x = 0.0;
    while (x == 0.0) x = uniform(0.0, hi);
    return x;
  }

  std::uint64_t pick(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
