#pragma once

#include <stdexcept>
#include <string>

namespace lrev {

/// Raised when a caller violates an operation's precondition
/// (index out of range, odd length where even is required, ...).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// gen_far ran out of attempts; usually epsilon is too large for n.
class NoFarInstance : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

} // namespace lrev
