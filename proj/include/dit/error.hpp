#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dit {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: malformed graph, out-of-range parameter, bad document.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An operation that requires a connected graph (or a tree) got something else.
class GraphClassError : public Error {
 public:
  using Error::Error;
};

/// A transformation rule was asked to run where its preconditions do not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic would leave the 64-bit range, or divides by zero.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Expression text could not be parsed; column is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace dit
