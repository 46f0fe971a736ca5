#pragma once

#include <stdexcept>
#include <string>

namespace bellbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Sizes or index ranges that do not fit together.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Arguments outside the documented domain of an operation.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// A request that would exceed an enumeration or size guard.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double best_so_far)
      : Error(what), best_so_far_(best_so_far) {}

  double best_so_far() const noexcept { return best_so_far_; }

private:
  double best_so_far_;
};

}  // namespace bellbound
