#pragma once

#include <stdexcept>
#include <string>

namespace quadprime {

// Argument outside the range a table or routine can serve.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Mathematical precondition violated (non-prime where a prime is required,
// gcd(a,q) > 1 for a ratio, zero polynomial, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds a configured size or memory budget.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Invalid tuning parameter (segment size, exponent B, tolerance, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace quadprime
