#pragma once

#include <stdexcept>
#include <string>

namespace catjac {

/// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside the domain on which the object is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rational generating function whose denominator does not start with 1.
class InvalidDenominator : public Error {
 public:
  using Error::Error;
};

/// Malformed line in a b-file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Non-contiguous indices in a b-file.
class GapError : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration was asked to go past its size limit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace catjac
