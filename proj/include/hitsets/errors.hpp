#pragma once

#include <stdexcept>
#include <string>

namespace hitsets {

/// Malformed or out-of-contract input: bad files, bad arguments, values
/// outside a documented size guard. Maps to CLI exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A structural property the algorithms rely on failed at runtime. This
/// signals a degenerate instance or a bug, never a recoverable condition.
/// Maps to CLI exit code 1.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hitsets
