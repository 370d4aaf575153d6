#pragma once

#include <stdexcept>
#include <string>

namespace slc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (documents, rationals).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input that parses but violates a structural or mathematical precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotNegativeDefinite : public ValidationError {
 public:
  explicit NotNegativeDefinite(const std::string& what = "intersection matrix is not negative definite")
      : ValidationError(what) {}
};

class Disconnected : public ValidationError {
 public:
  explicit Disconnected(const std::string& what = "exceptional graph is not connected")
      : ValidationError(what) {}
};

class GraphMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class Unclassified : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InconsistentRamification : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidTriple : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptySubcurve : public ValidationError {
 public:
  explicit EmptySubcurve(const std::string& what = "subcurve must contain at least one component")
      : ValidationError(what) {}
};

class DegreeTooSmall : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnknownExample : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Internal failure: a linear system that must be solvable was singular.
class SingularSystem : public Error {
 public:
  explicit SingularSystem(const std::string& what = "singular linear system") : Error(what) {}
};

/// A computation hit its hard size or iteration cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NonTermination : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class TooManyComponents : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

}  // namespace slc
