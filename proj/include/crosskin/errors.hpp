#pragma once

#include <stdexcept>
#include <string>

namespace crosskin {

/// Base class for all crosskin errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid configuration or parameter set (maps to CLI exit code 1).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Two fields that must live on the same grid do not.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

/// A spectral operator has a vanishing symbol at some mode.
class SingularOperatorError : public Error {
 public:
  using Error::Error;
};

/// Inner solver failed to converge, or the time stepper diverged
/// (maps to CLI exit code 2).
class SolverError : public Error {
 public:
  using Error::Error;
};

}  // namespace crosskin
