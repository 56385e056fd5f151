#ifndef PRENICHOLS_ERRORS_HPP
#define PRENICHOLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prenichols {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed literal, element, recipe or input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input violating a mathematical precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Arithmetic misuse: context mismatch, division by zero, inhomogeneous input.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The braiding does not look like it has a finite root system.
class InfiniteTypeError : public Error {
 public:
  using Error::Error;
};

// A configurable resource cap was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace prenichols

#endif  // PRENICHOLS_ERRORS_HPP
