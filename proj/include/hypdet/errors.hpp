#pragma once

#include <stdexcept>
#include <string>

namespace hypdet {

/// Root of every error raised by the library.  Each subclass names one
/// failure mode so callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole of a meromorphic function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Evaluation of a logarithm at a zero; carries the order of vanishing.
class ZeroError : public DomainError {
 public:
  ZeroError(const std::string& what, int order) : DomainError(what), order_(order) {}
  int order() const noexcept { return order_; }

 private:
  int order_;
};

/// Too close to a zero or pole to produce a finite, trustworthy value.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A constituent argument sits on the branch cut of a principal logarithm.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Some z - y_k fell on the cut (-inf, 0] of a superzeta sum.
class CutError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or product was asked to run outside its half-plane of convergence.
class ConvergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested working precision cannot be met.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Signature data does not describe a hyperbolic orbifold.
class SignatureError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed input data (orbifold documents, representation data, files).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerically evaluated multiplicity was not close to an integer.
class NonIntegerError : public Error {
 public:
  using Error::Error;
};

/// Geodesic enumeration cutoff is unusable.
class CutoffError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A continuation provider cannot evaluate at the requested point.
class ProviderDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hypdet
