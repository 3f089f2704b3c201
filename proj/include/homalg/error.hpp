#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed coefficient expression; `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Incompatible rings, undeclared parameters, name collisions.
class RingError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, or a quotient the target ring kind cannot represent.
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// Structural problems in algebra definitions (shapes, labels, grading).
class DefinitionError : public Error {
 public:
  using Error::Error;
};

}  // namespace homalg
