#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnmat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix dimension outside [1, max_dimension].
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Row or column index outside [0, n).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A row value does not fit into n bits, or similar out-of-range input.
class ValueError : public Error {
 public:
  using Error::Error;
};

/// Operation only defined for single-word rows (n <= 64).
class UnsupportedForDimension : public Error {
 public:
  using Error::Error;
};

/// Binary operation applied to matrices of different dimensions.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs_(lhs),
        rhs_(rhs) {}

  std::size_t lhs() const noexcept { return lhs_; }
  std::size_t rhs() const noexcept { return rhs_; }

 private:
  std::size_t lhs_;
  std::size_t rhs_;
};

/// Malformed matrix text. Line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Bad command-line or API usage (unknown op name, too few fit points, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace bnmat
