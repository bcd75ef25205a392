#pragma once

#include <stdexcept>
#include <string>

namespace shiish {

/// Malformed input: bad dimensions, out-of-range parameters, invalid words.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured size cap (n too large for an exhaustive sweep).
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError(what);
}

}  // namespace shiish
