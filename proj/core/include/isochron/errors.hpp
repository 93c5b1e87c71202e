#pragma once

#include <stdexcept>
#include <string>

namespace isochron {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series expansion was requested for a side of degree 2 (n = 1).
class DegreeTooLow : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a Σ-center was given a system that is not one.
class NotACenter : public Error {
 public:
  using Error::Error;
};

/// The side does not satisfy the hypotheses under which T_π = T/2.
class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

/// The reversion oracle found a nonzero coefficient off the (n-1)-grid.
class SparsityViolation : public Error {
 public:
  using Error::Error;
};

/// Failures of the numerical dynamics layer.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class EscapedAnnulus : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class StepFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class RootBracketFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

/// Malformed system specification text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// A coefficient list whose length is not degree + 1.
class DegreeMismatch : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace isochron
