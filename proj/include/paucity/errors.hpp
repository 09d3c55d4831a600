#pragma once

#include <stdexcept>
#include <string>

namespace paucity {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (shift grammar, witness files, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the documented domain of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

/// The enumeration would not fit in the configured memory budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A claimed solution pair does not satisfy the shifted product equation.
class NotASolution : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed. Never expected; indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

}  // namespace paucity
