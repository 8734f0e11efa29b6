#pragma once

#include <stdexcept>
#include <string>

namespace gsft {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument or configuration was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Container shapes disagree (sample count vs. config, grid vs. table, ...).
class ShapeMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A result would exceed the double range.
///
/// `log_magnitude` is the natural logarithm of the magnitude that could not
/// be represented, e.g. y^2 - x^2 for exp(-z^2).
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, double log_magnitude)
      : Error(what), log_magnitude_(log_magnitude) {}

  double log_magnitude() const noexcept { return log_magnitude_; }

 private:
  double log_magnitude_;
};

/// An adaptive scheme exhausted its budget before meeting its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double error_estimate)
      : Error(what), error_estimate_(error_estimate) {}

  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double error_estimate_;
};

}  // namespace gsft
