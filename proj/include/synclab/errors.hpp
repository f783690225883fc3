#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synclab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on state sets of different sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation (empty subset,
/// out-of-range state, n too small, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A map expected to be a one-point singular is not one.
class NotOnePointError : public Error {
 public:
  using Error::Error;
};

/// A relation was given a pair (s, s).
class DiagonalPairError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed its configured gate.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t partial_count = 0)
      : Error(what), partial_count_(partial_count) {}

  /// Number of items produced before the gate tripped (0 if not meaningful).
  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

/// Malformed automaton text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace synclab
