#pragma once

#include <stdexcept>
#include <string>

namespace nilschouten {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingParameter : public Error {
 public:
  explicit MissingParameter(std::string name)
      : Error("missing value for parameter '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

class NotNilpotentAtSample : public Error {
 public:
  using Error::Error;
};

class UnknownAlgebra : public Error {
 public:
  explicit UnknownAlgebra(const std::string& id) : Error("unknown algebra id '" + id + "'") {}
};

class DuplicateBracket : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based, 0 when not applicable.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace nilschouten
