#pragma once

#include <string>

#include "thdet/determinants.hpp"

namespace thdet {

/// Outcome of one identity/asymptotics/Monte-Carlo verification.  LHS and RHS
/// are kept in log/phase form; rel_err = |lhs/rhs - 1| evaluated in that
/// space.  Monte Carlo checks additionally fill mc_stderr and samples and
/// pass on a 4-sigma bracket instead of rel_err.
struct VerificationReport {
  LogDet lhs;
  LogDet rhs;
  double rel_err = 0.0;
  bool passed = false;
  std::string notes;

  // Parameters of the run.
  std::string command;       // producing operation
  int N = 0;
  int truncation = 0;        // Fredholm block size, when applicable
  std::string realization;   // "I".."IV" or "shifted"
  int k = 0;
  int sign = 0;
  double tolerance = 0.0;
  std::string convention;    // E_{1,+-} index convention, when applicable

  // Monte Carlo extras.
  double mc_stderr = 0.0;
  long long samples = 0;
  std::string normalization;
};

}  // namespace thdet
