#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbinterp {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixed variable counts or mismatched sequence lengths.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Leading term requested from the zero polynomial.
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};

/// Staircase requested for an ideal without a finite quotient basis.
class NonCofiniteError : public Error {
 public:
  using Error::Error;
};

/// Zero or linearly dependent derivative directions.
class InvalidDirectionError : public Error {
 public:
  using Error::Error;
};

/// Two nodes share the same point.
class DuplicateNodeError : public Error {
 public:
  using Error::Error;
};

/// Condition set incompatible with the requested interpolation mode.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// Malformed numeric literal or problem/solution document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent linear system; `row` is the offending assembled row.
class NoSolutionError : public Error {
 public:
  NoSolutionError(const std::string& what, std::size_t row)
      : Error(what), row(row) {}
  std::size_t row;
};

/// A guaranteed internal invariant failed to hold.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gbinterp
