#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "thdet/operators.hpp"
#include "thdet/symbol.hpp"

namespace thdet {

/// The coefficient sums of b = log a that every closed-form constant in the
/// asymptotics is built from.
struct TraceSums {
  Complex h_odd{0.0};    // sum_{n>=0} b_{2n+1}
  Complex h_even{0.0};   // sum_{n>=1} b_{2n}
  Complex h_sq{0.0};     // sum_{n>=1} n b_n^2       (= trace H(b)^2)
  Complex h_cross{0.0};  // sum_{n>=1} n b_n b_{-n}  (= trace H(b)H(b~))
};

inline TraceSums trace_sums(const FourierSymbol& b) {
  TraceSums t;
  const int top = std::max(b.hi(), -b.lo());
  for (int n = 1; n <= top; ++n) {
    const Complex bn = b.at(n);
    if (n % 2 == 1) {
      t.h_odd += bn;
    } else {
      t.h_even += bn;
    }
    t.h_sq += static_cast<double>(n) * bn * bn;
    t.h_cross += static_cast<double>(n) * bn * b.at(-n);
  }
  return t;
}

/// trace(M(b) - T(b)) for the four realizations:
///   I: +sum b_{2n+1}, II: -sum b_{2n+1}, III: -sum b_{2n}, IV: +sum b_{2n}.
inline Complex trace_m_minus_t(const FourierSymbol& b, Realization r) {
  const TraceSums t = trace_sums(b);
  switch (r.tag) {
    case RealizationTag::I: return t.h_odd;
    case RealizationTag::II: return -t.h_odd;
    case RealizationTag::III: return -t.h_even;
    case RealizationTag::IV: return t.h_even;
    default:
      throw std::invalid_argument("trace_m_minus_t: realization must be I-IV");
  }
}

/// Every closed-form constant for a given symbol and realization, together
/// with its logarithm (the log forms feed the overflow-safe comparisons):
///   G = exp(b_0)
///   E = exp(trace H(b)H(b~))
///   F = det T^{-1}(a) M(a) = exp(tmt - 1/2 trace H(b)^2)
///   F^ = det T(a^{-1}) M(a) = exp(tmt + 1/2 trace H(b)^2)  (even a only)
///   E^ = exp(tmt - 1/2 trace H(b)^2 + trace H(b)H(b~))
struct SzegoConstants {
  Complex g{1.0}, e{1.0}, f{1.0}, f_hat{1.0}, e_hat{1.0};
  Complex log_g{0.0}, log_e{0.0}, log_f{0.0}, log_f_hat{0.0}, log_e_hat{0.0};
  bool f_hat_valid = false;
  TraceSums traces;
};

inline SzegoConstants szego_constants(const FourierSymbol& a, Realization r) {
  const FourierSymbol b = log_symbol(a);
  const TraceSums t = trace_sums(b);
  const Complex tmt = trace_m_minus_t(b, r);
  SzegoConstants out;
  out.traces = t;
  out.log_g = b.at(0);
  out.log_e = t.h_cross;
  out.log_f = tmt - 0.5 * t.h_sq;
  out.log_e_hat = tmt - 0.5 * t.h_sq + t.h_cross;
  out.g = std::exp(out.log_g);
  out.e = std::exp(out.log_e);
  out.f = std::exp(out.log_f);
  out.e_hat = std::exp(out.log_e_hat);
  if (is_even(a)) {
    out.f_hat_valid = true;
    out.log_f_hat = tmt + 0.5 * t.h_sq;
    out.f_hat = std::exp(out.log_f_hat);
  }
  return out;
}

/// Lower summation limit of the odd-coefficient sum in E_{1,+-}.  The printed
/// form starts at n = 1 (omitting b_1); starting at n = 0 matches the general
/// asymptotic constant for realizations I/II.  Both are carried and the dense
/// determinants decide.
enum class IndexConvention { paper, from_n0 };

inline const char* convention_name(IndexConvention c) {
  return c == IndexConvention::paper ? "paper" : "from_n0";
}

struct CaseConstants {
  Complex e1_plus{1.0}, e1_minus{1.0}, e2{1.0}, e3{1.0};
  Complex log_e1_plus{0.0}, log_e1_minus{0.0}, log_e2{0.0}, log_e3{0.0};
  IndexConvention index_convention = IndexConvention::from_n0;
};

inline CaseConstants case_constants(const FourierSymbol& a,
                                    IndexConvention convention) {
  const FourierSymbol b = log_symbol(a);
  const TraceSums t = trace_sums(b);
  const Complex odd_sum =
      convention == IndexConvention::paper ? t.h_odd - b.at(1) : t.h_odd;
  const Complex common = -0.5 * t.h_sq + t.h_cross;
  CaseConstants out;
  out.index_convention = convention;
  out.log_e1_plus = odd_sum + common;
  out.log_e1_minus = -odd_sum + common;
  out.log_e2 = -t.h_even + common;
  out.log_e3 = -std::log(2.0) + t.h_even + common;
  out.e1_plus = std::exp(out.log_e1_plus);
  out.e1_minus = std::exp(out.log_e1_minus);
  out.e2 = std::exp(out.log_e2);
  out.e3 = std::exp(out.log_e3);
  return out;
}

}  // namespace thdet
