#pragma once

#include <stdexcept>
#include <string>

namespace snowflake {

// Thrown when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown when a computation cannot make progress on an otherwise valid input
// (e.g. a sampler that keeps rejecting every proposal).
class PathologicalInput : public std::runtime_error {
 public:
  explicit PathologicalInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace snowflake
