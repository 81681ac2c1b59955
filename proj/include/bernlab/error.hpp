#pragma once

#include <stdexcept>
#include <string>

namespace bernlab {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// x in {0,-1,-2,...} for log_gamma.
class PoleError : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

// Evaluation point on the cut [0, inf) of a Cauchy-type integral or map.
class BranchCutError : public InvalidArgument {
public:
  using InvalidArgument::InvalidArgument;
};

// A numerical procedure failed on valid input.
class NumericalError : public Error {
public:
  using Error::Error;
};

class QuadratureDivergence : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class BracketFailure : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class BranchTrackingFailure : public NumericalError {
public:
  using NumericalError::NumericalError;
};

// The requested working precision cannot resolve the answer.
class PrecisionError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class NonConvergence : public NumericalError {
public:
  NonConvergence(const std::string& what, int iterations, double last_metric)
      : NumericalError(what), iterations_(iterations), last_metric_(last_metric) {}

  int iterations() const noexcept { return iterations_; }
  double last_metric() const noexcept { return last_metric_; }

private:
  int iterations_;
  double last_metric_;
};

} // namespace bernlab
