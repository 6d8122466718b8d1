#pragma once

#include <stdexcept>
#include <string>

namespace gperm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edgelist, rotation system, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input that violates its contract
/// (wrong edge count, odd degree, not a cut, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A size or search bound was exceeded; the answer is unknown, not negative.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace gperm
