#pragma once

#include <stdexcept>
#include <string>

namespace syzygy {

// Base of every error raised by the library. Callers that only care about
// "something went wrong" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponent vectors / module ranks that do not line up.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Operands built over different rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

// A homogeneity requirement was violated.
class DegreeError : public Error {
 public:
  using Error::Error;
};

// The ideal contains a unit.
class ImproperIdealError : public Error {
 public:
  using Error::Error;
};

// Exponent or degree left the 32-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// A configurable step budget was exhausted. Never swallowed.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Precondition of an operation not met (e.g. a non-minimal resolution
// handed to betti_table).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Invalid construction parameters (non-prime modulus, bad search params).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Something that is mathematically impossible happened. Always a bug in
// this library, never a property of the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace syzygy
