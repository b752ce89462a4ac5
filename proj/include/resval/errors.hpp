#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resval {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `offset()` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A mathematical precondition does not hold (composite p, zero resultant, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotPrimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotMonicError : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroResultantError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Resolution of weight zero has no depth.
class EmptyResolutionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested instance exceeds the desk-scale limits of an exhaustive routine.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A proven inequality or identity failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace resval
