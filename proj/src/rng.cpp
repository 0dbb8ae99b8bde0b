#include "phaselab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace phaselab {

double SplitMix64::gaussian() {
  // Box-Muller, cosine branch only; u1 shifted away from 0.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

std::size_t SplitMix64::categorical(const std::vector<double>& cumulative) {
  if (cumulative.empty()) throw std::invalid_argument("categorical: empty distribution");
  const double u = uniform();
  std::size_t lo = 0, hi = cumulative.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (u < cumulative[mid]) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 g(master ^ (0xA0761D6478BD642FULL * (index + 1)));
  g.next();
  return g.next();
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(master, a), b);
}

}  // namespace phaselab
