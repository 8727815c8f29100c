#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sylrank {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (ring descriptors, matrices, rank-function specs).
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

/// An operation was applied to values living over different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must hold failed; always a bug or bad input data.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sylrank
