#pragma once

#include <stdexcept>
#include <string>

namespace eqlef {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shape mismatch (non-square input, incompatible product, wrong vector length).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation (zero polynomial, mixed groups).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant of a group, complex or datum does not hold.
/// `where` names the offending location, e.g. "iso class (1)/x, degree 2".
class ValidationError : public Error {
 public:
  ValidationError(std::string where, const std::string &what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

  const std::string &where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace eqlef
