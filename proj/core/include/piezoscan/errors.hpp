#pragma once

#include <stdexcept>
#include <string>

namespace piezoscan {

/// Base for every error raised by the modeling library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a domain invariant (non-positive thickness, bad material, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Support-to-junction distance is not strictly inside the half span.
class DegenerateGeometryError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownMaterialError : public Error {
 public:
  using Error::Error;
};

class UnsupportedUnitError : public Error {
 public:
  using Error::Error;
};

/// A direct linear solve met a zero (or non-finite) pivot.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

}  // namespace piezoscan
