#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "thdet/matrix.hpp"
#include "thdet/operators.hpp"
#include "thdet/symbol.hpp"

namespace thdet {

/// Determinant in log/phase form so that quantities like G^N * (...) can be
/// compared at large N without overflow.
struct LogDet {
  double log_abs = 0.0;  // natural log of |det|; -inf when zero_flag is set
  double phase = 0.0;    // in (-pi, pi]
  bool zero_flag = false;

  static LogDet one() { return {0.0, 0.0, false}; }

  static LogDet zero() {
    return {-std::numeric_limits<double>::infinity(), 0.0, true};
  }

  static LogDet from_value(Complex z) {
    if (z == Complex(0.0)) return zero();
    return {std::log(std::abs(z)), std::arg(z), false};
  }

  // exp(w) without forming the value.
  static LogDet from_log(Complex w) {
    return {w.real(), detail::wrap_phase(w.imag()), false};
  }

  // exp(w)^n
  static LogDet pow_of_exp(Complex w, long long n) {
    return {w.real() * n, detail::wrap_phase(w.imag() * n), false};
  }

  Complex value() const {
    if (zero_flag) return 0.0;
    return std::polar(std::exp(log_abs), phase);
  }

  friend LogDet operator*(const LogDet& a, const LogDet& b) {
    if (a.zero_flag || b.zero_flag) return zero();
    return {a.log_abs + b.log_abs, detail::wrap_phase(a.phase + b.phase), false};
  }
};

/// |lhs/rhs - 1| computed in log/phase space.  Exact-zero cases compare by
/// flag; a zero on one side only is an infinite error.
inline double logdet_rel_err(const LogDet& lhs, const LogDet& rhs) {
  if (lhs.zero_flag && rhs.zero_flag) return 0.0;
  if (lhs.zero_flag != rhs.zero_flag) {
    return std::numeric_limits<double>::infinity();
  }
  const double dlog = lhs.log_abs - rhs.log_abs;
  const double dphi = detail::wrap_phase(lhs.phase - rhs.phase);
  return std::abs(std::exp(Complex(dlog, dphi)) - 1.0);
}

/// LU with partial pivoting; the determinant is accumulated as the product of
/// pivots in log/phase form.  A pivot below 1e-300 times the largest row norm
/// marks an exactly singular matrix.
inline LogDet det_lu(ComplexMatrix m) {
  if (m.rows() != m.cols()) {
    throw NonSquareError("det_lu requires a square matrix");
  }
  const int n = m.rows();
  if (n == 0) return LogDet::one();

  double max_row_norm = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += std::abs(m(i, j));
    max_row_norm = std::max(max_row_norm, s);
  }
  if (max_row_norm == 0.0) return LogDet::zero();

  double log_abs = 0.0;
  double phase = 0.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double piv_mag = std::abs(m(col, col));
    for (int i = col + 1; i < n; ++i) {
      const double mag = std::abs(m(i, col));
      if (mag > piv_mag) {
        piv = i;
        piv_mag = mag;
      }
    }
    if (piv_mag < 1e-300 * max_row_norm) return LogDet::zero();
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(col, j), m(piv, j));
      phase += detail::kPi;  // row swap flips the sign
    }
    const Complex p = m(col, col);
    log_abs += std::log(piv_mag);
    phase += std::arg(p);
    for (int i = col + 1; i < n; ++i) {
      const Complex factor = m(i, col) / p;
      if (factor == Complex(0.0)) continue;
      for (int j = col + 1; j < n; ++j) m(i, j) -= factor * m(col, j);
      m(i, col) = 0.0;
    }
  }
  return {log_abs, detail::wrap_phase(phase), false};
}

/// Truncated Fredholm determinant det(I + Q_N K Q_N) for the even-symbol
/// exact identity.  The block size doubles from 32 until the Fl^1_1 tail of
/// the generating symbol beyond degree 2N+2M falls below tol.
struct FredholmResult {
  Complex value{1.0};
  int truncation = 0;
  double tail_estimate = 0.0;
};

inline FredholmResult fredholm_det(const FourierSymbol& a, Realization r, int N,
                                   double tol) {
  if (r.tag == RealizationTag::Shifted) {
    throw std::invalid_argument("fredholm_det: realization must be I-IV");
  }
  if (r.tag == RealizationTag::IV && N < 1) {
    throw std::invalid_argument("fredholm_det: realization IV needs N >= 1");
  }
  const FactorizationEvenPlus fac = factor_even_plus(a);
  const FourierSymbol c = multiply(inverse(fac.a_plus), flip(fac.a_plus));
  // Generator of the K block entries per realization (shifted copies of c).
  const FourierSymbol gen =
      r.tag == RealizationTag::III   ? multiply(FourierSymbol::monomial(-1), c)
      : r.tag == RealizationTag::IV ? multiply(FourierSymbol::monomial(1), c)
                                    : c;
  constexpr int kMaxBlock = 1 << 14;
  for (int block = 32;; block *= 2) {
    const double tail = fl11_tail(gen, 2 * N + 2 * block);
    if (tail < tol) {
      const ComplexMatrix k = detail::k_block_from_c(c, r.tag, N, block);
      const LogDet det = det_lu(ComplexMatrix::identity(block) + k);
      FredholmResult out;
      out.value = det.value();
      out.truncation = block;
      // Floor at the double-precision noise of the elimination itself.
      out.tail_estimate = std::max(tail, 1e-14);
      return out;
    }
    if (block > kMaxBlock) {
      throw NoConvergenceError("fredholm_det truncation exceeded the degree cap");
    }
  }
}

}  // namespace thdet
