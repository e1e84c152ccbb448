#pragma once

#include <stdexcept>
#include <string>

namespace thdet {

// Base class for all numeric/domain failures raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A requested coefficient window exceeds the configured degree cap.
class DegreeCapError : public Error {
 public:
  explicit DegreeCapError(const std::string& what) : Error(what) {}
};

// The symbol has nonzero winding number; no logarithm exists in the algebra.
class NonzeroWindingError : public Error {
 public:
  explicit NonzeroWindingError(const std::string& what) : Error(what) {}
};

// The symbol comes too close to zero on the sampling grid.
class NearZeroError : public Error {
 public:
  explicit NearZeroError(const std::string& what) : Error(what) {}
};

// An operation requiring an even symbol received a non-even one.
class NotEvenError : public Error {
 public:
  explicit NotEvenError(const std::string& what) : Error(what) {}
};

class NonSquareError : public Error {
 public:
  explicit NonSquareError(const std::string& what) : Error(what) {}
};

// Adaptive truncation failed to reach the requested tolerance.
class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(const std::string& what) : Error(what) {}
};

// A finite-section computation was asked for a window too small to be exact.
class WindowTooSmallError : public Error {
 public:
  explicit WindowTooSmallError(const std::string& what) : Error(what) {}
};

// Malformed symbol/report specification text.
class SpecParseError : public Error {
 public:
  explicit SpecParseError(const std::string& what) : Error(what) {}
};

}  // namespace thdet
