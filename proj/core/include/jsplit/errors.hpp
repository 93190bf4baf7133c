#pragma once

#include <stdexcept>
#include <string>

namespace jsplit {

/// Caller violated an operation's precondition (bad dimensions, wrong algebra, malformed input).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A constructed object failed the identity checks it is required to pass.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Peirce decomposition could not be completed (components do not span).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jsplit
