#pragma once

#include <stdexcept>
#include <string>

namespace specm {

inline constexpr const char* kVersion = "0.1.0";

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller input: dimension mismatches, invalid parameters, malformed flags.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Numerical failure: rank deficiency, failed factorization, divergence.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// File access and parse failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace specm
