#pragma once

#include <stdexcept>
#include <string>

namespace valext {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Objects from incompatible groups, towers or modules were combined.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation was applied outside its domain (inverse of zero, residue of a non-integral element, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The request is well posed but beyond what the implemented algorithms decide.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A capability error for inputs of an unsupported shape, e.g. multivariate gcd.
class UnsupportedError : public CapabilityError {
 public:
  using CapabilityError::CapabilityError;
};

// A documented precondition of a construction does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace valext
