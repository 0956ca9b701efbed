#pragma once

#include <stdexcept>

namespace switchtrack {

// Bad inputs or broken preconditions (CLI maps these to exit code 2).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic breakdown at runtime, e.g. total underflow (CLI exit code 3).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace switchtrack
