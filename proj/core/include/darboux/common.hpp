#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace darboux {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument: index out of range, shape mismatch, bad enum.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Evaluation outside the domain of a function (r <= 0, pole at the origin).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested derivative order exceeds what a closure can deliver.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (e.g. singular leading block).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A numerical invariant failed at run time (realness, matching, blow-up).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace darboux
