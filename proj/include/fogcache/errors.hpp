#pragma once

#include <stdexcept>
#include <string>

namespace fogcache {

/// Raised when caller-supplied data violates a documented precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (a library bug, not bad input).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fogcache
