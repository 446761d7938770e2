#pragma once

#include <stdexcept>
#include <string>

namespace ncsynth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid input (bad capacity, reserved label...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Reference to a node or edge that does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A guarantee of the two-terminal capacity theorem did not hold at runtime.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class NonTerminationError : public Error {
 public:
  using Error::Error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

class CodeConstructionError : public Error {
 public:
  using Error::Error;
};

class CyclicResidualError : public CodeConstructionError {
 public:
  using CodeConstructionError::CodeConstructionError;
};

class InfeasibleResidualError : public CodeConstructionError {
 public:
  using CodeConstructionError::CodeConstructionError;
};

class PlanMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncsynth
