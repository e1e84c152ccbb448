#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thdet/errors.hpp"
#include "thdet/fft.hpp"

namespace thdet {

using Complex = std::complex<double>;

inline constexpr double kDefaultTailTol = 1e-16;
inline constexpr int kDefaultMaxDegree = 4096;

namespace detail {
inline int& max_degree_ref() {
  static int cap = [] {
    if (const char* env = std::getenv("TH_SZEGO_MAX_DEGREE")) {
      const int v = std::atoi(env);
      if (v > 0) return v;
    }
    return kDefaultMaxDegree;
  }();
  return cap;
}
}  // namespace detail

// Half-width cap on coefficient windows (overridable via TH_SZEGO_MAX_DEGREE).
inline int max_degree() { return detail::max_degree_ref(); }
inline void set_max_degree(int cap) { detail::max_degree_ref() = cap; }

/// A function on the unit circle represented by a trimmed table of Laurent
/// coefficients a_n over a finite degree window [lo, hi] with lo <= 0 <= hi.
/// Coefficients below tail_tol in magnitude are dropped on construction, so
/// every stored symbol is in canonical form and has finite Fl^1_1 norm.
class FourierSymbol {
 public:
  using CoeffMap = std::map<int, Complex>;

  FourierSymbol() = default;

  explicit FourierSymbol(CoeffMap entries, double tail_tol = kDefaultTailTol)
      : tail_tol_(tail_tol) {
    for (const auto& [n, v] : entries) {
      if (std::abs(v) >= tail_tol_) coeffs_.emplace(n, v);
    }
    update_window();
  }

  static FourierSymbol constant(Complex v) {
    return FourierSymbol(CoeffMap{{0, v}});
  }

  // v * t^n
  static FourierSymbol monomial(int n, Complex v = 1.0) {
    return FourierSymbol(CoeffMap{{n, v}});
  }

  const CoeffMap& coeffs() const { return coeffs_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  double tail_tol() const { return tail_tol_; }
  bool is_zero() const { return coeffs_.empty(); }

  Complex at(int n) const {
    const auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Complex(0.0) : it->second;
  }

  // Pointwise value a(e^{i*theta}).
  Complex eval(double theta) const {
    Complex sum = 0.0;
    for (const auto& [n, c] : coeffs_) {
      sum += c * std::polar(1.0, n * theta);
    }
    return sum;
  }

 private:
  void update_window() {
    lo_ = 0;
    hi_ = 0;
    if (!coeffs_.empty()) {
      lo_ = std::min(0, coeffs_.begin()->first);
      hi_ = std::max(0, coeffs_.rbegin()->first);
    }
    const int cap = max_degree();
    if (-lo_ > cap || hi_ > cap) {
      throw DegreeCapError("coefficient window [" + std::to_string(lo_) + "," +
                           std::to_string(hi_) + "] exceeds degree cap " +
                           std::to_string(cap));
    }
  }

  CoeffMap coeffs_;
  int lo_ = 0;
  int hi_ = 0;
  double tail_tol_ = kDefaultTailTol;
};

// ---------------------------------------------------------------------------
// Linear-algebraic plumbing on coefficient tables.

inline FourierSymbol add(const FourierSymbol& a, const FourierSymbol& b) {
  FourierSymbol::CoeffMap out = a.coeffs();
  for (const auto& [n, v] : b.coeffs()) out[n] += v;
  return FourierSymbol(std::move(out), std::min(a.tail_tol(), b.tail_tol()));
}

inline FourierSymbol scale(const FourierSymbol& a, Complex factor) {
  FourierSymbol::CoeffMap out;
  for (const auto& [n, v] : a.coeffs()) out[n] = factor * v;
  return FourierSymbol(std::move(out), a.tail_tol());
}

inline FourierSymbol sub(const FourierSymbol& a, const FourierSymbol& b) {
  return add(a, scale(b, -1.0));
}

// (a~)_n = a_{-n}
inline FourierSymbol flip(const FourierSymbol& a) {
  FourierSymbol::CoeffMap out;
  for (const auto& [n, v] : a.coeffs()) out[-n] = v;
  return FourierSymbol(std::move(out), a.tail_tol());
}

// ||a||_{Fl^1_1} = sum (1+|n|) |a_n|
inline double norm_fl11(const FourierSymbol& a) {
  double s = 0.0;
  for (const auto& [n, v] : a.coeffs()) s += (1.0 + std::abs(n)) * std::abs(v);
  return s;
}

// Fl^1_1 mass strictly beyond degree |n| > deg.
inline double fl11_tail(const FourierSymbol& a, int deg) {
  double s = 0.0;
  for (const auto& [n, v] : a.coeffs()) {
    if (std::abs(n) > deg) s += (1.0 + std::abs(n)) * std::abs(v);
  }
  return s;
}

inline bool is_even(const FourierSymbol& a, double tol = 1e-13) {
  return norm_fl11(sub(a, flip(a))) <= tol;
}

// Laurent-coefficient convolution (ab)_n = sum_k a_k b_{n-k}.
inline FourierSymbol multiply(const FourierSymbol& a, const FourierSymbol& b) {
  if (a.is_zero() || b.is_zero()) return FourierSymbol();
  const int cap = max_degree();
  const long lo = static_cast<long>(a.lo()) + b.lo();
  const long hi = static_cast<long>(a.hi()) + b.hi();
  if (-lo > cap || hi > cap) {
    throw DegreeCapError("product window [" + std::to_string(lo) + "," +
                         std::to_string(hi) + "] exceeds degree cap " +
                         std::to_string(cap));
  }
  FourierSymbol::CoeffMap out;
  for (const auto& [n, av] : a.coeffs()) {
    for (const auto& [m, bv] : b.coeffs()) {
      out[n + m] += av * bv;
    }
  }
  return FourierSymbol(std::move(out), std::min(a.tail_tol(), b.tail_tol()));
}

// ---------------------------------------------------------------------------
// Grid sampling, logarithm, exponential.

namespace detail {

inline std::size_t default_grid(const FourierSymbol& a) {
  const std::size_t width = static_cast<std::size_t>(a.hi() - a.lo());
  return std::max<std::size_t>(16, next_pow2(8 * (width + 1)));
}

inline std::vector<Complex> sample_grid(const FourierSymbol& a,
                                        std::size_t grid) {
  std::vector<Complex> bins(grid, Complex(0.0));
  for (const auto& [n, c] : a.coeffs()) {
    const long m = ((n % static_cast<long>(grid)) + static_cast<long>(grid)) %
                   static_cast<long>(grid);
    bins[static_cast<std::size_t>(m)] += c;
  }
  return grid_synthesize(std::move(bins));
}

inline double wrap_phase(double x) {
  double p = std::remainder(x, 2.0 * kPi);
  if (p <= -kPi) p += 2.0 * kPi;
  return p;
}

// Phase unwrapped along the grid; the same pass yields the winding number.
struct UnwrappedPhase {
  std::vector<double> phase;
  int winding;
};

inline UnwrappedPhase unwrap_phase(const std::vector<Complex>& values) {
  UnwrappedPhase out;
  out.phase.resize(values.size());
  double prev_arg = std::arg(values[0]);
  double acc = prev_arg;
  out.phase[0] = acc;
  double total = 0.0;
  for (std::size_t j = 1; j < values.size(); ++j) {
    const double arg = std::arg(values[j]);
    const double delta = wrap_phase(arg - prev_arg);
    acc += delta;
    total += delta;
    out.phase[j] = acc;
    prev_arg = arg;
  }
  total += wrap_phase(std::arg(values[0]) - prev_arg);
  out.winding = static_cast<int>(std::lround(total / (2.0 * kPi)));
  return out;
}

// Aliasing estimate: largest analyzed coefficient in the outer quarter band.
inline double outer_band_max(const std::vector<Complex>& bins) {
  const long grid = static_cast<long>(bins.size());
  double worst = 0.0;
  for (long m = 0; m < grid; ++m) {
    const long n = m <= grid / 2 ? m : m - grid;
    if (std::abs(n) > grid / 4) worst = std::max(worst, std::abs(bins[m]));
  }
  return worst;
}

inline FourierSymbol symbol_from_bins(const std::vector<Complex>& bins,
                                      double tail_tol) {
  const long grid = static_cast<long>(bins.size());
  FourierSymbol::CoeffMap out;
  for (long m = 0; m < grid; ++m) {
    if (std::abs(bins[m]) < tail_tol) continue;
    const long n = m <= grid / 2 ? m : m - grid;
    out[static_cast<int>(n)] = bins[m];
  }
  return FourierSymbol(std::move(out), tail_tol);
}

inline constexpr double kAliasTol = 1e-14;
inline constexpr std::size_t kGridMax = std::size_t(1) << 20;

}  // namespace detail

// Total argument increment over the circle divided by 2*pi.
inline int winding_number(const FourierSymbol& a, int grid_size = 0) {
  std::size_t grid = grid_size > 0
                         ? detail::next_pow2(static_cast<std::size_t>(grid_size))
                         : detail::default_grid(a);
  int last = 0;
  bool have_last = false;
  for (; grid <= detail::kGridMax; grid *= 2) {
    const auto values = detail::sample_grid(a, grid);
    double min_abs = std::abs(values[0]);
    for (const auto& v : values) min_abs = std::min(min_abs, std::abs(v));
    if (min_abs < 1e-10) {
      throw NearZeroError("symbol magnitude " + std::to_string(min_abs) +
                          " below 1e-10 on sampling grid");
    }
    const int w = detail::unwrap_phase(values).winding;
    if (have_last && w == last) return w;
    last = w;
    have_last = true;
  }
  throw NoConvergenceError("winding number did not stabilize under grid refinement");
}

/// Coefficients of log a via grid sampling with a continuous-argument
/// logarithm.  The grid starts at the smallest power of two >= 8*(width+1)
/// and doubles until the outer-band aliasing estimate drops below 1e-14.
inline FourierSymbol log_symbol(const FourierSymbol& a, int grid_size = 0) {
  std::size_t grid = grid_size > 0
                         ? detail::next_pow2(static_cast<std::size_t>(grid_size))
                         : detail::default_grid(a);
  int last_winding = 0;
  bool have_winding = false;
  for (; grid <= detail::kGridMax; grid *= 2) {
    const auto values = detail::sample_grid(a, grid);
    double min_abs = std::abs(values[0]);
    for (const auto& v : values) min_abs = std::min(min_abs, std::abs(v));
    if (min_abs < 1e-10) {
      throw NearZeroError("symbol magnitude " + std::to_string(min_abs) +
                          " below 1e-10 on sampling grid");
    }
    const auto unwrapped = detail::unwrap_phase(values);
    if (unwrapped.winding != 0) {
      // Confirm on a refined grid before giving up: a coarse grid can alias.
      if (have_winding && unwrapped.winding == last_winding) {
        throw NonzeroWindingError("winding number " +
                                  std::to_string(unwrapped.winding) +
                                  " is nonzero; log does not exist");
      }
      last_winding = unwrapped.winding;
      have_winding = true;
      continue;
    }
    std::vector<Complex> logs(values.size());
    for (std::size_t j = 0; j < values.size(); ++j) {
      logs[j] = Complex(std::log(std::abs(values[j])), unwrapped.phase[j]);
    }
    const auto bins = detail::grid_analyze(std::move(logs));
    if (detail::outer_band_max(bins) < detail::kAliasTol) {
      return detail::symbol_from_bins(bins, a.tail_tol());
    }
  }
  throw NoConvergenceError("log_symbol grid refinement exceeded the maximum grid");
}

/// Pointwise exponential by grid sampling, same refinement rule as log_symbol.
inline FourierSymbol exp_symbol(const FourierSymbol& b, int grid_size = 0) {
  std::size_t grid = grid_size > 0
                         ? detail::next_pow2(static_cast<std::size_t>(grid_size))
                         : detail::default_grid(b);
  for (; grid <= detail::kGridMax; grid *= 2) {
    auto values = detail::sample_grid(b, grid);
    for (auto& v : values) v = std::exp(v);
    const auto bins = detail::grid_analyze(std::move(values));
    if (detail::outer_band_max(bins) < detail::kAliasTol) {
      return detail::symbol_from_bins(bins, b.tail_tol());
    }
  }
  throw DegreeCapError("exp_symbol result does not decay within the maximum window");
}

// a^{-1} through the guarded logarithm path.
inline FourierSymbol inverse(const FourierSymbol& a) {
  return exp_symbol(scale(log_symbol(a), -1.0));
}

// ---------------------------------------------------------------------------
// Decompositions and factorizations.

/// a = a_plus + a_minus with a_plus supported on n >= 0, a_minus on n < 0.
inline std::pair<FourierSymbol, FourierSymbol> decompose_plus_minus(
    const FourierSymbol& a) {
  FourierSymbol::CoeffMap plus, minus;
  for (const auto& [n, v] : a.coeffs()) {
    (n >= 0 ? plus : minus)[n] = v;
  }
  return {FourierSymbol(std::move(plus), a.tail_tol()),
          FourierSymbol(std::move(minus), a.tail_tol())};
}

/// b = b_zero + b_minus with b_zero even and b_minus supported on n < 0:
/// [b_zero]_0 = b_0, [b_zero]_{+-k} = b_k, [b_minus]_{-k} = b_{-k} - b_k.
inline std::pair<FourierSymbol, FourierSymbol> decompose_even_minus(
    const FourierSymbol& b) {
  FourierSymbol::CoeffMap zero, minus;
  const Complex b0 = b.at(0);
  if (std::abs(b0) > 0.0) zero[0] = b0;
  const int top = std::max(b.hi(), -b.lo());
  for (int k = 1; k <= top; ++k) {
    const Complex bk = b.at(k);
    const Complex bmk = b.at(-k);
    if (std::abs(bk) > 0.0) {
      zero[k] = bk;
      zero[-k] = bk;
    }
    const Complex rest = bmk - bk;
    if (std::abs(rest) > 0.0) minus[-k] = rest;
  }
  return {FourierSymbol(std::move(zero), b.tail_tol()),
          FourierSymbol(std::move(minus), b.tail_tol())};
}

/// Wiener-Hopf factorization of an even symbol: a = a_plus * flip(a_plus).
struct FactorizationEvenPlus {
  FourierSymbol a_plus;
  FourierSymbol symbol;
};

inline FactorizationEvenPlus factor_even_plus(const FourierSymbol& a) {
  const double skew = norm_fl11(sub(a, flip(a)));
  if (skew > 1e-13) {
    throw NotEvenError("factor_even_plus requires an even symbol (||a - a~|| = " +
                       std::to_string(skew) + ")");
  }
  const FourierSymbol s = log_symbol(a);
  FourierSymbol::CoeffMap bp;
  bp[0] = s.at(0) / 2.0;
  for (const auto& [n, v] : s.coeffs()) {
    if (n >= 1) bp[n] = v;
  }
  FactorizationEvenPlus out;
  out.a_plus = exp_symbol(FourierSymbol(std::move(bp), a.tail_tol()));
  out.symbol = a;
  return out;
}

/// a = a_minus * a_zero with a_zero even, a_minus anti-analytic and
/// normalized to [log a_minus]_0 = 0 (hence [a_minus]_0 = 1).
struct FactorizationMinusEven {
  FourierSymbol a_minus;
  FourierSymbol a_zero;
};

inline FactorizationMinusEven factor_minus_even(const FourierSymbol& a) {
  const FourierSymbol b = log_symbol(a);
  const auto [b_zero, b_minus] = decompose_even_minus(b);
  FactorizationMinusEven out;
  out.a_minus = exp_symbol(b_minus);
  out.a_zero = exp_symbol(b_zero);
  return out;
}

}  // namespace thdet
