#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logdecomp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed outcome space, partition, or input document.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Outcome count beyond the configured (or hard) limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Negative or non-finite argument to a loss function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Contents, sums, or variables built over different outcome spaces.
class MixedSpaceError : public Error {
 public:
  using Error::Error;
};

class UnboundVariableError : public Error {
 public:
  using Error::Error;
};

/// A property the library relies on did not hold (e.g. two incomparable
/// maximal discernible subsets, or oracle passes that disagree).
class InvariantError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace logdecomp
