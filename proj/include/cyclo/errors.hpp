#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// Precondition violated by the caller (mismatched rings, bad shapes, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by inverse() on an element that is not a unit.
class NotUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A brute-force enumeration would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; signals a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclo
