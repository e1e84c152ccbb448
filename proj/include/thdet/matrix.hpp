#pragma once

#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "thdet/errors.hpp"

namespace thdet {

/// Dense row-major complex matrix.  All finite sections in this library are
/// materialized as values of this type; no structured storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::complex<double>& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const std::complex<double>& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  ComplexMatrix block(int row0, int col0, int nrows, int ncols) const {
    ComplexMatrix out(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
  }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend ComplexMatrix operator*(std::complex<double> s, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
    return out;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const std::complex<double> aik = a(i, k);
        if (aik == std::complex<double>(0.0)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  // Row-major CSV of "re,im" pairs, for debugging.
  void write_csv(std::ostream& os) const {
    char buf[96];
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) {
        const auto& v = (*this)(i, j);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v.real(), v.imag());
        os << buf;
        if (j + 1 < cols_) os << ',';
      }
      os << '\n';
    }
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::complex<double>> data_;
};

}  // namespace thdet
