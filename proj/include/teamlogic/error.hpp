#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teamlogic {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexical, syntax, arity and unknown-symbol errors found while reading text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Semantic errors: unbound variables, unknown symbols, arity mismatches,
/// malformed models or transition systems.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// A configurable search or size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace teamlogic
