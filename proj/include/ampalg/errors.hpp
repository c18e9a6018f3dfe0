#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ampalg {

/// Raised for malformed or mathematically invalid user input (CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in one of the text formats. `line` is 1-based, `column` is a
/// 0-based character offset into the offending line (or into the whole text
/// for single-line grammars).
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", position " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

/// A structural identity that must hold by construction failed. Always a bug
/// (CLI exit code 2).
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An exhaustive oracle was asked to work beyond its search budget.
class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ampalg
