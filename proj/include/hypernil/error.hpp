#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypernil {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands whose dimensions do not fit together.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Input that violates an operation's precondition (not hypercomplex,
/// not 2-step, failing integrability of an extension, ...).
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Malformed DSL or JSON input. `line` and `column` are 1-based; 0 means
/// the position is unknown.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace hypernil
