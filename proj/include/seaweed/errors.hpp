#pragma once

#include <stdexcept>
#include <string>

namespace seaweed {

// Bad user input: rank out of bounds, malformed cut sets, unsupported family.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A structural fact the construction is supposed to guarantee failed to hold.
// Seeing this means a bug, not a bad input.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace seaweed
