#pragma once

#include <stdexcept>
#include <string>

namespace legsum {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A sieve or scan that would produce nothing.
class EmptyTableError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A statistic requested over an empty population of primes.
class EmptyPopulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// alpha has a denominator with no closed-form character decomposition.
class UnsupportedAlphaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The computation would exceed the configured work budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// alpha*p is an integer, where the Fourier identity is not asserted.
class BoundaryCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace legsum
