#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace lagsel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The caller supplied data that violates a precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidInput {
 public:
  DimensionMismatch(const std::string& what, std::size_t expected, std::size_t actual)
      : InvalidInput(what + ": expected dimension " + std::to_string(expected) + ", got " +
                     std::to_string(actual)) {}
};

/// Structure constants fail the Jacobi identity on a basis triple (0-based).
class JacobiViolation : public InvalidInput {
 public:
  explicit JacobiViolation(std::array<std::size_t, 3> triple)
      : InvalidInput("Jacobi identity fails on basis triple (" + std::to_string(triple[0] + 1) +
                     ", " + std::to_string(triple[1] + 1) + ", " +
                     std::to_string(triple[2] + 1) + ")"),
        triple_(triple) {}

  const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }

 private:
  std::array<std::size_t, 3> triple_;
};

class NotJordanHolder : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A jump set whose Lagrangian cell formula yields a k-vector outside J_m.
class InvalidCell : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An internal consistency check failed. Raised only on implementation bugs.
class CheckFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace lagsel
