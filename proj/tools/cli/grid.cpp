#include "cli/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir1d::cli {

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 points");
  if (!(lo < hi)) throw std::invalid_argument("grid needs min < max");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  g.back() = hi;
  return g;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0)) throw std::invalid_argument("log grid needs min > 0");
  auto g = linear_grid(std::log(lo), std::log(hi), n);
  for (auto& x : g) x = std::exp(x);
  g.front() = lo;
  g.back() = hi;
  return g;
}

}  // namespace casimir1d::cli
