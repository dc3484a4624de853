#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside the mathematical domain of a function
/// (negative curvature, non-positive Bessel argument, R <= rho, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A domain specification does not describe a valid closed curve set.
class InvalidDomainError : public Error {
 public:
  using Error::Error;
};

/// The inversion center is not strictly inside the domain.
class InvalidCenterError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operator was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A dense linear solve met a (numerically) singular operator.
class SingularOperatorError : public Error {
 public:
  using Error::Error;
};

/// Field evaluation requested at a point inside the domain or too close to its boundary.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Not enough eigenvalues to fit an asymptotic law.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// A CLI request combines options that are not supported together.
class UnsupportedCombinationError : public Error {
 public:
  using Error::Error;
};

}  // namespace steklov
