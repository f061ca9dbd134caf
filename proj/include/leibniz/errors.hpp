#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace leibniz {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Subspaces or vectors that live in different ambient spaces.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotASubalgebra : public Error {
 public:
  using Error::Error;
};

// The requested computation has no supported route for this field/algebra.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

// An exhaustive scan would exceed the configured budget.
class BudgetExceeded : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

// A computed result failed its own certificates. Never swallowed.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

// An enumeration observed a counterexample to a proven theorem; means a bug.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class PremiseViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace leibniz
