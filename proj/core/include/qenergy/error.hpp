#pragma once

#include <stdexcept>
#include <string>

namespace qenergy {

/// Base class for every error raised by the estimator library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: bad syntax, wrong types, missing fields, or
/// violated type invariants. Maps to CLI exit code 1.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but violates a contract of the model.
/// Maps to CLI exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The model has no answer for the inputs (above-threshold physical error
/// rate, decoder distance out of table range). Maps to CLI exit code 2.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written. Maps to CLI exit code 3.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qenergy
