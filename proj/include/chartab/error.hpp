#pragma once

#include <stdexcept>
#include <string>

namespace chartab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Division by zero in an exact field, or a zero denominator.
class ZeroDivision : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (polynomials, labels, words, JSON tables).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency assertion failed (e.g. a trace that should be a
/// polynomial is not). Indicates a construction bug or tampered input data.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

/// The Gram matrix of a declared basis is not invertible.
class SingularGram : public Error {
 public:
  using Error::Error;
};

/// A class function is not in the span of the declared basis.
class NotInSpan : public Error {
 public:
  using Error::Error;
};

}  // namespace chartab
