#pragma once

#include <stdexcept>
#include <string>

namespace clutter_algebra {

// Malformed input or a violated precondition.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance exceeds a configured cap; never silently truncated.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A machine-word kernel overflowed; callers retry with arbitrary precision.
class WordOverflow : public CapExceeded {
 public:
  WordOverflow() : CapExceeded("machine-word overflow") {}
};

// Two routes that must agree did not.  Always a bug.
class CrossCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Cap on intermediate polyhedral/enumeration sizes, read from
// CLUTTER_ALGEBRA_MAX_CELLS (default 2,000,000).
std::size_t max_cells();

}  // namespace clutter_algebra
