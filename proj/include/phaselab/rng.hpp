// Deterministic random streams. Every stochastic component derives its own
// stream from (master seed, counter) so results do not depend on scheduling.
#pragma once

#include <cstdint>
#include <vector>

namespace phaselab {

// SplitMix64: fast, well-mixed 64-bit generator. Fully pinned here so
// sequences are identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (cosine branch).
  double gaussian();

  /// Index into a cumulative distribution; cum.back() is expected to be ~1.
  std::size_t categorical(const std::vector<double>& cumulative);

 private:
  std::uint64_t state_;
};

/// Stream seed for task `index` under `master`; counter-based, so any task
/// can derive its stream without touching the others.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b);

}  // namespace phaselab
