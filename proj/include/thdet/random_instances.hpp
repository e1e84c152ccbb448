#pragma once

#include "thdet/general_m.hpp"
#include "thdet/rng.hpp"
#include "thdet/symbol.hpp"

namespace thdet {

inline Complex random_unit_disc(detail::SplitMix64& rng) {
  const double r = std::sqrt(rng.uniform01());
  return std::polar(r, 2.0 * detail::kPi * rng.uniform01());
}

// Trig polynomial with unit-disc coefficients on [lo, hi].
inline FourierSymbol random_trig_poly(detail::SplitMix64& rng, int lo, int hi) {
  FourierSymbol::CoeffMap out;
  for (int n = lo; n <= hi; ++n) out[n] = random_unit_disc(rng);
  return FourierSymbol(std::move(out));
}

// Even trig polynomial of degree deg with unit-disc coefficients.
inline FourierSymbol random_even_poly(detail::SplitMix64& rng, int deg) {
  FourierSymbol::CoeffMap out;
  out[0] = random_unit_disc(rng);
  for (int n = 1; n <= deg; ++n) {
    const Complex v = random_unit_disc(rng);
    out[n] = v;
    out[-n] = v;
  }
  return FourierSymbol(std::move(out));
}

inline PerturbationVector random_perturbation(detail::SplitMix64& rng,
                                              int entry_count) {
  PerturbationVector x;
  x.entries.resize(entry_count);
  for (auto& v : x.entries) v = random_unit_disc(rng);
  return x;
}

}  // namespace thdet
