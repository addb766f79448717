#pragma once

#include <stdexcept>
#include <string>

namespace scrolls {

/// Input outside an operation's documented domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Total codimension of a cycle list does not match the target dimension.
class DimensionError : public DomainError {
 public:
  DimensionError(long expected, long actual)
      : DomainError("codimension mismatch: expected " + std::to_string(expected) +
                    ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  long expected() const { return expected_; }
  long actual() const { return actual_; }

 private:
  long expected_;
  long actual_;
};

/// Base fails the incidence condition required by the operation.
class InvalidBaseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two routes that must agree produced different values.  Never swallowed:
/// it means a transcription bug, not bad input.
class ConsistencyFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace scrolls
