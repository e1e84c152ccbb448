#pragma once

#include <stdexcept>
#include <string>

#include "thdet/matrix.hpp"
#include "thdet/symbol.hpp"

namespace thdet {

enum class RealizationTag { I, II, III, IV, Shifted };

/// One of the four M(a) forms of the compatible-pair construction, or a
/// member of the shifted Toeplitz+Hankel family T(a) + sign * H(a t^k).
struct Realization {
  RealizationTag tag = RealizationTag::I;
  int k = 0;     // only for Shifted
  int sign = 0;  // only for Shifted, +1 or -1

  static Realization I() { return {RealizationTag::I, 0, 0}; }
  static Realization II() { return {RealizationTag::II, 0, 0}; }
  static Realization III() { return {RealizationTag::III, 0, 0}; }
  static Realization IV() { return {RealizationTag::IV, 0, 0}; }
  static Realization shifted(int k, int sign) {
    return {RealizationTag::Shifted, k, sign};
  }

  std::string name() const {
    switch (tag) {
      case RealizationTag::I: return "I";
      case RealizationTag::II: return "II";
      case RealizationTag::III: return "III";
      case RealizationTag::IV: return "IV";
      case RealizationTag::Shifted:
        return "shifted(k=" + std::to_string(k) +
               (sign >= 0 ? ",+" : ",-") + ")";
    }
    return "?";
  }
};

inline Realization realization_from_name(const std::string& name) {
  if (name == "I") return Realization::I();
  if (name == "II") return Realization::II();
  if (name == "III") return Realization::III();
  if (name == "IV") return Realization::IV();
  throw std::invalid_argument("unknown realization: " + name);
}

// T(a): entry (j,k) = a_{j-k}
inline ComplexMatrix toeplitz_section(const FourierSymbol& a, int N) {
  ComplexMatrix m(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) m(j, k) = a.at(j - k);
  return m;
}

// H(a): entry (j,k) = a_{j+k+1}
inline ComplexMatrix hankel_section(const FourierSymbol& a, int N) {
  ComplexMatrix m(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) m(j, k) = a.at(j + k + 1);
  return m;
}

/// Finite section of the four realizations:
///   I:  a_{j-k} + a_{j+k+1}        (T(a) + H(a))
///   II: a_{j-k} - a_{j+k+1}        (T(a) - H(a))
///   III: a_{j-k} - a_{j+k+2}       (T(a) - H(t^{-1} a))
///   IV: a_{j-k} + a_{j+k} [k >= 1] (T(a) + H(t a) Q_1, Q_1 baked in)
inline ComplexMatrix m_section(const FourierSymbol& a, int N, Realization r) {
  ComplexMatrix m(N, N);
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      switch (r.tag) {
        case RealizationTag::I:
          m(j, k) = a.at(j - k) + a.at(j + k + 1);
          break;
        case RealizationTag::II:
          m(j, k) = a.at(j - k) - a.at(j + k + 1);
          break;
        case RealizationTag::III:
          m(j, k) = a.at(j - k) - a.at(j + k + 2);
          break;
        case RealizationTag::IV:
          m(j, k) = k >= 1 ? a.at(j - k) + a.at(j + k) : a.at(j - k);
          break;
        case RealizationTag::Shifted:
          m(j, k) = a.at(j - k) +
                    static_cast<double>(r.sign) * a.at(j + k + 1 - r.k);
          break;
      }
    }
  }
  return m;
}

/// Section of T(a) + H(t a) for even a: entry (j,k) = a_{j-k} + a_{j+k}.
/// Its determinant is 2 * det(m_section(a, N, IV)) for N >= 1.
inline ComplexMatrix oplus_section(const FourierSymbol& a, int N) {
  if (!is_even(a)) {
    throw NotEvenError("oplus_section requires an even symbol");
  }
  ComplexMatrix m(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) m(j, k) = a.at(j - k) + a.at(j + k);
  return m;
}

// T(a) + sign * H(a t^k): entry (i,j) = a_{i-j} + sign * a_{i+j+1-k}.
inline ComplexMatrix shifted_section(const FourierSymbol& a, int N, int k,
                                     int sign) {
  return m_section(a, N, Realization::shifted(k, sign));
}

namespace detail {

// Block of the exact-identity operator K built from c = a_plus^{-1} * a_plus~.
inline ComplexMatrix k_block_from_c(const FourierSymbol& c, RealizationTag tag,
                                    int offset, int size) {
  ComplexMatrix m(size, size);
  for (int j = 0; j < size; ++j) {
    for (int k = 0; k < size; ++k) {
      const int p = offset + j;
      const int q = offset + k;
      switch (tag) {
        case RealizationTag::I: m(j, k) = c.at(p + q + 1); break;
        case RealizationTag::II: m(j, k) = -c.at(p + q + 1); break;
        case RealizationTag::III: m(j, k) = -c.at(p + q + 2); break;
        case RealizationTag::IV: m(j, k) = c.at(p + q); break;
        default:
          throw std::invalid_argument("k_operator_block: realization must be I-IV");
      }
    }
  }
  return m;
}

}  // namespace detail

/// (offset..offset+size) square block of the operator K of the even-symbol
/// exact identity, where K is the closed Hankel form per realization with
/// c = a_plus^{-1} * flip(a_plus).  For realization IV the finite-rank term
/// T(a_plus^{-1}) H(t a_plus~) vanishes under Q_N for N >= 1, so offset >= 1
/// is required there.
inline ComplexMatrix k_operator_block(const FourierSymbol& a, Realization r,
                                      int offset, int size) {
  if (r.tag == RealizationTag::IV && offset < 1) {
    throw std::invalid_argument("k_operator_block: realization IV needs offset >= 1");
  }
  const FactorizationEvenPlus fac = factor_even_plus(a);
  const FourierSymbol c = multiply(inverse(fac.a_plus), flip(fac.a_plus));
  return detail::k_block_from_c(c, r.tag, offset, size);
}

enum class CorrectionVariant { plusH, minusH, minusHt, plusHt };

/// l x l correction determinant block of the shifted-symbol theorem, built
/// from w = a_zero^{-1}:
///   plusH / minusH: w_{j-k} +- w_{j+k+1}
///   minusHt:        w_{j-k} - w_{j+k+2}
///   plusHt:         w_{j-k} + w_{j+k}
inline ComplexMatrix correction_block(const FourierSymbol& a_zero, int l,
                                      CorrectionVariant variant) {
  if (!is_even(a_zero)) {
    throw NotEvenError("correction_block requires an even a_zero");
  }
  const FourierSymbol w = inverse(a_zero);
  ComplexMatrix m(l, l);
  for (int j = 0; j < l; ++j) {
    for (int k = 0; k < l; ++k) {
      switch (variant) {
        case CorrectionVariant::plusH: m(j, k) = w.at(j - k) + w.at(j + k + 1); break;
        case CorrectionVariant::minusH: m(j, k) = w.at(j - k) - w.at(j + k + 1); break;
        case CorrectionVariant::minusHt: m(j, k) = w.at(j - k) - w.at(j + k + 2); break;
        case CorrectionVariant::plusHt: m(j, k) = w.at(j - k) + w.at(j + k); break;
      }
    }
  }
  return m;
}

}  // namespace thdet
