#pragma once

#include <stdexcept>
#include <string>

namespace twobody {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside a declared operating range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on a pole of a special function.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// An iterative method did not meet its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Root bracketing failed on an interval.
class BracketError : public Error {
 public:
  using Error::Error;
};

/// Eigenbasis truncation too small for the requested state.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Grid does not cover the state's support, or two grids do not match.
class GridError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace twobody
