#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace possat {

/// Caller broke an operation's precondition (bad parameters, malformed input).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A strict-order matrix failed one or more poset axioms.
class ValidationError : public UsageError {
 public:
  ValidationError(const std::string& what, std::vector<std::string> violations)
      : UsageError(what), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// A mathematical promise was broken at runtime, e.g. a family reported as
/// saturated whose missing set forms no copy. Indicates a bug or a genuine
/// counterexample, never bad input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace possat
