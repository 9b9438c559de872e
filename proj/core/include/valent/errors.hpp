#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Text could not be parsed; `position` is the 0-based offset of the offending
/// character in the input string.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Shapes do not line up (ambient dimensions, vector lengths, matrix sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value violates an operation's domain (zero state vector, probability
/// outside [0,1], non-homogeneous pattern entry, base not greater than 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be invertible (or a Gram matrix that must be regular)
/// is singular.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Projective collapse onto a subspace orthogonal to the state.
class OrthogonalStateError : public Error {
 public:
  using Error::Error;
};

/// Ambient dimension exceeds the exhaustive-search cap.
class DimensionCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace valent
