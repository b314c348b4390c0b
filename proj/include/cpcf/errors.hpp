#pragma once

#include <stdexcept>
#include <string>

namespace cpcf {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (m <= 0, inaccessible source, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exact-mode operation requested on a configuration that only admits the
// approximation.
class ModeError : public Error {
 public:
  using Error::Error;
};

class NonRectangularObstacle : public Error {
 public:
  using Error::Error;
};

// An invariant of an exact computation was violated (e.g. a negative
// assembled count). Never clamped away.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ValidationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace cpcf
