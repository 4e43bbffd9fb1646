#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exsuff {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size or count exceeded one of the hard enumeration/support caps.
class BoundsError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid value: NaN coordinate, probability outside [0,1], bad parameter.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Conditioning on an order-statistic value that has probability zero.
class NullConditioningError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  /// One-based line number, or 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace exsuff
