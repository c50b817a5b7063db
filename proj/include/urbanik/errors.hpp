#pragma once

#include <stdexcept>
#include <string>

namespace urbanik {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (cut of log-Gamma, t <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quadrature exhausted its node budget before meeting its tolerance.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// Direct Fourier inversion would lose all significant digits to cancellation.
class CancellationError : public Error {
 public:
  using Error::Error;
};

/// A computed density is negative beyond its own error estimate.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace urbanik
