#pragma once

#include <stdexcept>
#include <string>

namespace sympspin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Clifford multiplication or composite operator would exceed the spinor degree cap.
/// Raised instead of truncating, so that an identity check can never pass on clipped data.
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input tensor does not satisfy the required curvature symmetries.
class SymmetryViolation : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sympspin
