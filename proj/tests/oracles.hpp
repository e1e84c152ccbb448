// Independent oracles used by the test suites: series evaluations, cofactor
// determinants, brute-force convolution.  Everything here is deliberately
// naive so it shares no code path with the library.
#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "thdet/matrix.hpp"
#include "thdet/symbol.hpp"

namespace oracles {

using thdet::Complex;

// Modified Bessel I_n(x) by its power series (n may be negative: I_{-n} = I_n).
inline double bessel_i(int n, double x) {
  n = std::abs(n);
  double sum = 0.0;
  double term = std::pow(x / 2.0, n);
  for (int k = 1; k <= n; ++k) term /= k;  // (x/2)^n / n!
  for (int m = 0; m < 60; ++m) {
    sum += term;
    term *= (x / 2.0) * (x / 2.0) / ((m + 1.0) * (m + 1.0 + n));
  }
  return sum;
}

// Bessel J_n(x) by its alternating power series (J_{-n} = (-1)^n J_n).
inline double bessel_j(int n, double x) {
  const bool negate = n < 0 && (-n) % 2 == 1;
  n = std::abs(n);
  double sum = 0.0;
  double term = std::pow(x / 2.0, n);
  for (int k = 1; k <= n; ++k) term /= k;
  for (int m = 0; m < 60; ++m) {
    sum += term;
    term *= -(x / 2.0) * (x / 2.0) / ((m + 1.0) * (m + 1.0 + n));
  }
  return negate ? -sum : sum;
}

// O(n^2) direct-sum convolution over dense windows.
inline std::map<int, Complex> convolve(const thdet::FourierSymbol& a,
                                       const thdet::FourierSymbol& b) {
  std::map<int, Complex> out;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    for (int m = b.lo(); m <= b.hi(); ++m) {
      out[n + m] += a.at(n) * b.at(m);
    }
  }
  return out;
}

// Recursive cofactor expansion; fine up to 6x6.
inline Complex cofactor_det(const thdet::ComplexMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1.0;
  if (n == 1) return m(0, 0);
  Complex det = 0.0;
  for (int j = 0; j < n; ++j) {
    thdet::ComplexMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    det += sign * m(0, j) * cofactor_det(minor);
  }
  return det;
}

// Kolmogorov-Smirnov statistic of samples against a uniform law on [lo, hi].
inline double ks_uniform(std::vector<double> samples, double lo, double hi) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = (samples[i] - lo) / (hi - lo);
    d = std::max(d, std::abs((i + 1) / n - cdf));
    d = std::max(d, std::abs(cdf - i / n));
  }
  return d;
}

// Least-squares polynomial fit of degree `deg`, returning the coefficients
// (constant first).  Small normal-equations solve with partial pivoting.
inline std::vector<double> polyfit(const std::vector<double>& xs,
                                   const std::vector<double>& ys, int deg) {
  const int m = deg + 1;
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  for (std::size_t s = 0; s < xs.size(); ++s) {
    std::vector<double> pow_x(2 * m - 1, 1.0);
    for (int p = 1; p < 2 * m - 1; ++p) pow_x[p] = pow_x[p - 1] * xs[s];
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) a[i][j] += pow_x[i + j];
      a[i][m] += pow_x[i] * ys[s];
    }
  }
  for (int col = 0; col < m; ++col) {
    int piv = col;
    for (int r = col + 1; r < m; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    for (int r = col + 1; r < m; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> coef(m, 0.0);
  for (int r = m - 1; r >= 0; --r) {
    double acc = a[r][m];
    for (int c = r + 1; c < m; ++c) acc -= a[r][c] * coef[c];
    coef[r] = acc / a[r][r];
  }
  return coef;
}

inline thdet::FourierSymbol sym(std::map<int, Complex> entries) {
  return thdet::FourierSymbol(std::move(entries));
}

}  // namespace oracles
