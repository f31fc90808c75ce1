#pragma once

#include <stdexcept>

namespace odds {

// Thrown when a computation would exceed its configured budget (outcome
// enumeration width, threshold-search candidate count, pattern order, ...).
// The CLI maps this to its own exit code, distinct from invalid input.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace odds
