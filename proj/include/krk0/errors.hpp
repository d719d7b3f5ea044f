#pragma once

#include <stdexcept>
#include <string>

namespace krk0 {

/// Base of every error raised by the library. The CLI maps these to exit
/// code 1 (bad input); anything else escaping is an internal error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class ZeroInput : public Error {
 public:
  using Error::Error;
};

class NoMonicGenerator : public Error {
 public:
  NoMonicGenerator() : Error("NoMonicGenerator: no generator is monic up to sign") {}
};

class InvalidRange : public Error {
 public:
  using Error::Error;
};

/// A validation failure; what() names the violated constraint.
class ConstraintViolation : public Error {
 public:
  explicit ConstraintViolation(const std::string& constraint)
      : ConstraintViolation("ConstraintViolation", constraint) {}
  const std::string& constraint() const noexcept { return constraint_; }

 protected:
  ConstraintViolation(const std::string& name, const std::string& constraint)
      : Error(name + ": " + constraint), constraint_(constraint) {}

 private:
  std::string constraint_;
};

/// The coprimality constraint on (alpha2, alpha3) specifically.
class NotCoprime : public ConstraintViolation {
 public:
  NotCoprime() : ConstraintViolation("NotCoprime", "(α₂,α₃)=1") {}
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class WrongKind : public Error {
 public:
  using Error::Error;
};

class TrivialThreefold : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace krk0
