#pragma once

#include <stdexcept>
#include <string>

namespace bolext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed inconsistent shapes, fields, or violated a documented precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A document did not match its schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration requested over an infinite field or beyond the configured bound.
class UnsupportedEnumeration : public Error {
 public:
  using Error::Error;
};

/// quotient_dim called with a subspace that is not contained in the other.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (for example a product escaping the kernel of a projection).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace bolext
