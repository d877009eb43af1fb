#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trigimpl {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algebraic operation was asked for something undefined
/// (gcd of two zeros, resultant in a variable that does not occur, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

/// The input describes a degenerate object (empty support function,
/// vanishing resultant, ...).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A surface parametrization violates the general assumptions and no
/// reordering or reparametrization repairs it.
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

/// The instance exceeds the configured cost guard.
class TooLarge : public Error {
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

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace trigimpl
