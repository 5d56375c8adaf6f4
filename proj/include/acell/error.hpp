#pragma once

#include <stdexcept>
#include <string>

namespace acell {

// Raised when an algebraic operation's precondition fails (shape mismatch,
// asymmetric input, inexact division, ...).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the text parsers. Line and column are 1-based; line is 0 when
// the input was a single expression rather than a file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(format(what, line, column)),
        message_(what),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line > 0) {
      return "line " + std::to_string(line) + ", column " +
             std::to_string(column) + ": " + what;
    }
    return "column " + std::to_string(column) + ": " + what;
  }

  std::string message_;
  int line_;
  int column_;
};

}  // namespace acell
