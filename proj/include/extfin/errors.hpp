#pragma once

#include <stdexcept>
#include <string>

namespace extfin {

// Arithmetic failures: division by zero, evaluation at a pole.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed input data (JSON, expressions, dimension mismatches).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A standing hypothesis on the algebra or module does not hold
// (E not symmetric, reducible, trajectory leaving the module cone, ...).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations disagree. Never expected; signals a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace extfin
