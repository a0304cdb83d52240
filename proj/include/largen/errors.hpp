#pragma once

#include <stdexcept>
#include <string>

namespace largen {

// Bad input: size mismatches, malformed text, out-of-domain parameters.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A computation was refused because it would exceed the configured work
// budget. Carries a human-readable size estimate.
class BudgetError : public std::runtime_error {
public:
  BudgetError(const std::string& what, std::string estimate)
      : std::runtime_error(what + " (estimated size: " + estimate + ")"),
        estimate_(std::move(estimate)) {}

  const std::string& estimate() const { return estimate_; }

private:
  std::string estimate_;
};

}  // namespace largen
