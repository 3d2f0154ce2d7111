#pragma once

#include <stdexcept>
#include <string>

namespace mpr {

/// Input outside the mathematical domain of an operation (zero where a unit is
/// required, a non-prime where a prime is required, an excluded group, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input or intermediate value outside the supported range (128-bit width,
/// enumeration ceilings, table sizes).
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Malformed command line or mismatched output schema.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant failed during construction of a result.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mpr
