#pragma once

#include <stdexcept>
#include <string>

namespace refnc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar, polynomial, catalog or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Precondition violated by caller-supplied data (dimension mismatch,
/// division by zero, unknown catalog name, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A group or element turned out to be infinite or larger than allowed.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// An exact self-check failed. Signals a bug or corrupted input, never a
/// numerical issue.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace refnc
