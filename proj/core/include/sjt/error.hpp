#pragma once

#include <stdexcept>
#include <string>

namespace sjt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Gröbner / minors computation exceeded a configured bound.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class NotContained : public Error {
 public:
  using Error::Error;
};

class NotSubalgebra : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

class ZeroPoint : public Error {
 public:
  ZeroPoint() : Error("point must be nonzero") {}
};

class ConeViolation : public Error {
 public:
  using Error::Error;
};

class RangeTooLarge : public Error {
 public:
  using Error::Error;
};

class ProjectivityUndecided : public Error {
 public:
  using Error::Error;
};

}  // namespace sjt
