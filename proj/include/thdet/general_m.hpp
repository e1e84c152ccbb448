#pragma once

#include <string>
#include <vector>

#include "thdet/matrix.hpp"
#include "thdet/operators.hpp"
#include "thdet/symbol.hpp"

namespace thdet {

/// Finitely supported sequence x defining the rank-one perturbation e_0 x^T,
/// which together with relations
///   (i)  M(t^{-n}) = T(t^{-n})
///   (ii) M((t+t^{-1})^n) = (T(t+t^{-1}) + e_0 x^T)^n
/// determines M on all trigonometric polynomials.
struct PerturbationVector {
  std::vector<Complex> entries;

  static PerturbationVector zero() { return {}; }

  static PerturbationVector unit(int j) {
    PerturbationVector x;
    x.entries.assign(j + 1, Complex(0.0));
    x.entries[j] = 1.0;
    return x;
  }

  // Largest index carrying a nonzero entry (0 for the zero vector).
  int support_bound() const {
    int s = 0;
    for (int i = 0; i < static_cast<int>(entries.size()); ++i) {
      if (entries[i] != Complex(0.0)) s = i;
    }
    return s;
  }
};

/// Coefficients of a trigonometric polynomial over the canonical basis
/// {(t+t^{-1})^n} u {t^{-n}}: p = sum c[n] (t+t^{-1})^n + sum d[n] t^{-n}.
struct PolyInCanonicalBasis {
  std::vector<Complex> c;  // c[n], n = 0..m
  std::vector<Complex> d;  // d[n], n >= 1; d[0] unused

  FourierSymbol reconstruct() const {
    FourierSymbol acc;
    FourierSymbol binom = FourierSymbol::constant(1.0);
    const FourierSymbol t_pair = add(FourierSymbol::monomial(1),
                                     FourierSymbol::monomial(-1));
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (n > 0) binom = multiply(binom, t_pair);
      acc = add(acc, scale(binom, c[n]));
    }
    for (std::size_t n = 1; n < d.size(); ++n) {
      acc = add(acc, FourierSymbol::monomial(-static_cast<int>(n), d[n]));
    }
    return acc;
  }
};

/// Triangular elimination from the top degree: c_m is the coefficient of t^m,
/// subtract c_m (t+t^{-1})^m, recurse; the remaining negative part gives d.
inline PolyInCanonicalBasis basis_convert(const FourierSymbol& p) {
  PolyInCanonicalBasis out;
  const int m = p.hi();
  out.c.assign(static_cast<std::size_t>(m) + 1, Complex(0.0));
  FourierSymbol rest = p;
  for (int n = m; n >= 0; --n) {
    const Complex cn = rest.at(n);
    out.c[static_cast<std::size_t>(n)] = cn;
    if (cn != Complex(0.0)) {
      FourierSymbol binom = FourierSymbol::constant(1.0);
      const FourierSymbol t_pair = add(FourierSymbol::monomial(1),
                                       FourierSymbol::monomial(-1));
      for (int i = 0; i < n; ++i) binom = multiply(binom, t_pair);
      rest = sub(rest, scale(binom, cn));
    }
  }
  out.d.assign(static_cast<std::size_t>(-rest.lo()) + 1, Complex(0.0));
  for (const auto& [n, v] : rest.coeffs()) {
    if (n < 0) out.d[static_cast<std::size_t>(-n)] = v;
  }
  return out;
}

namespace detail {

// L x L section of B = T(t+t^{-1}) + e_0 x^T.
inline ComplexMatrix perturbed_shift_section(const PerturbationVector& x, int L) {
  ComplexMatrix b(L, L);
  for (int i = 0; i + 1 < L; ++i) {
    b(i, i + 1) = 1.0;
    b(i + 1, i) = 1.0;
  }
  for (int j = 0; j < std::min<int>(L, static_cast<int>(x.entries.size())); ++j) {
    b(0, j) += x.entries[j];
  }
  return b;
}

}  // namespace detail

/// N x N section of M(p).  Semi-infinite products are evaluated on a padded
/// section and cropped; the pad n_max*(1+support_bound) makes the crop exact
/// because each factor of B leaks one band plus the support width.
inline ComplexMatrix m_general_section(const PerturbationVector& x,
                                       const FourierSymbol& p, int N) {
  const int s = x.support_bound();
  const int deg = std::max(p.hi(), -p.lo());
  if (N <= deg + s) {
    throw WindowTooSmallError("m_general_section: N = " + std::to_string(N) +
                              " must exceed degree " + std::to_string(deg) +
                              " plus support bound " + std::to_string(s));
  }
  const PolyInCanonicalBasis basis = basis_convert(p);
  const int n_max = static_cast<int>(basis.c.size()) - 1;
  const int pad = n_max * (1 + s);
  const int L = N + pad;

  ComplexMatrix acc(L, L);
  const ComplexMatrix b = detail::perturbed_shift_section(x, L);
  ComplexMatrix power = ComplexMatrix::identity(L);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) power = power * b;
    const Complex cn = basis.c[static_cast<std::size_t>(n)];
    if (cn != Complex(0.0)) acc = acc + cn * power;
  }
  for (std::size_t n = 1; n < basis.d.size(); ++n) {
    const Complex dn = basis.d[n];
    if (dn == Complex(0.0)) continue;
    for (int i = 0; i + static_cast<int>(n) < L; ++i) {
      acc(i, i + static_cast<int>(n)) += dn;
    }
  }
  return acc.block(0, 0, N, N);
}

/// K(t^n) = M(t^n) - T(t^n); nonzero entries live in the first n rows only.
inline ComplexMatrix k_of_tn(const PerturbationVector& x, int n, int N) {
  return m_general_section(x, FourierSymbol::monomial(n), N) -
         toeplitz_section(FourierSymbol::monomial(n), N);
}

/// Max-entry deviation of M(abc) - T(a) M(b) M(c) over the top-left corner
/// that truncation cannot pollute.  Requires a anti-analytic, c even, and all
/// three to be trigonometric polynomials.
inline double check_compatibility(const PerturbationVector& x,
                                  const FourierSymbol& a, const FourierSymbol& b,
                                  const FourierSymbol& c, int N) {
  if (a.hi() > 0) {
    throw std::invalid_argument("check_compatibility: a must be supported on n <= 0");
  }
  if (!is_even(c)) {
    throw NotEvenError("check_compatibility: c must be even");
  }
  const int s = x.support_bound();
  const int deg_a = -a.lo();
  const int deg_b = std::max(b.hi(), -b.lo());
  const int deg_c = std::max(c.hi(), -c.lo());
  const int corner = N - deg_a - deg_b - deg_c - 2 * s;
  if (corner < 1) {
    throw WindowTooSmallError("check_compatibility: N = " + std::to_string(N) +
                              " leaves no exact corner");
  }
  const FourierSymbol abc = multiply(multiply(a, b), c);
  const ComplexMatrix lhs = m_general_section(x, abc, N);
  const ComplexMatrix rhs = toeplitz_section(a, N) * m_general_section(x, b, N) *
                            m_general_section(x, c, N);
  return (lhs - rhs).block(0, 0, corner, corner).max_abs();
}

}  // namespace thdet
