#pragma once

#include <cmath>
#include <cstdint>

#include "thdet/fft.hpp"

namespace thdet::detail {

// Splittable 64-bit generator; per-sample streams are derived from
// (seed, sample index) so accumulation order never matters.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform01() {  // in (0, 1)
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = uniform01();
    const double v = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * kPi * v);
    have_spare_ = true;
    return r * std::cos(2.0 * kPi * v);
  }

 private:
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline std::uint64_t sample_stream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0xD1342543DE82EF95ULL * (index + 1)));
  return g.next();
}

}  // namespace thdet::detail
