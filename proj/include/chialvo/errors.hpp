#pragma once

#include <stdexcept>
#include <string>

namespace chialvo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain of an operation
/// (negative k, fold requested past the degenerate k, k above the
/// Misiurewicz search cap, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not produce a result.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Floating-point range exceeded (exp overflow and similar).
class RangeError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// No sign change over a bracket, or a bracket could not be grown.
class BracketError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Two orbit points coincide within the comparison tolerance.
class TieError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace chialvo
