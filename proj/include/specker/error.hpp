#pragma once

#include <stdexcept>
#include <string>

namespace specker {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A requested object exceeds the configured size bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Two values from different algebras were combined.
class AlgebraMismatchError : public Error {
 public:
  using Error::Error;
};

/// Structurally malformed input (wrong lengths, bad indices, invalid JSON).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A value lies outside the domain of a partial map.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in textual input; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace specker
