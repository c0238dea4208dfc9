#pragma once

#include <stdexcept>
#include <string>

namespace gca {

// Raised when an operation's mathematical precondition fails (step mismatch,
// bracket of a non-pseudo-scalar, non-circuit input, ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for malformed user input: config files, expressions, commands.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gca
