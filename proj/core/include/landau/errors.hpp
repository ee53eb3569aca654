#pragma once

#include <stdexcept>
#include <string>

namespace landau {

/// A physically or mathematically invalid input (negative field, bad quantum numbers, x < 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidQuantumNumbers : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Valid input outside the range an evaluation path supports.
class UnsupportedRange : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Caller asked for something that does not exist (unknown operator name, bad option).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace landau
