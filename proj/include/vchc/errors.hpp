#pragma once

#include <stdexcept>
#include <string>

namespace vchc {

/// Malformed instance document. `where` is a JSON-pointer style location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// The instance admits no feasible demand assignment.
class InfeasibleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A property the algorithm guarantees did not hold; always a bug.
class InvariantViolation : public std::logic_error {
  using std::logic_error::logic_error;
};

/// Exhaustive search would exceed its node budget.
class BudgetExceeded : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace vchc
