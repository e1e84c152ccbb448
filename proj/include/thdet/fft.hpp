#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace thdet::detail {

inline constexpr double kPi = 3.14159265358979323846;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place radix-2 transform, length must be a power of two.
// sign = +1 computes X_k = sum_j x_j e^{+2*pi*i*jk/n} (synthesis),
// sign = -1 the conjugate transform (analysis).  No 1/n scaling.
inline void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (n < 2) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * kPi / static_cast<double>(len);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        // Fresh twiddles keep the transform accurate near machine precision.
        const std::complex<double> w = std::polar(1.0, ang * static_cast<double>(j));
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

// Grid values v_j = sum_m bins[m] e^{2*pi*i*jm/n} from frequency bins.
inline std::vector<std::complex<double>> grid_synthesize(
    std::vector<std::complex<double>> bins) {
  fft_pow2(bins, +1);
  return bins;
}

// Frequency bins c_m = (1/n) sum_j values[j] e^{-2*pi*i*jm/n}.
inline std::vector<std::complex<double>> grid_analyze(
    std::vector<std::complex<double>> values) {
  const double inv = 1.0 / static_cast<double>(values.size());
  fft_pow2(values, -1);
  for (auto& v : values) v *= inv;
  return values;
}

}  // namespace thdet::detail
