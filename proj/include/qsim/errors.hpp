#pragma once

#include <stdexcept>
#include <string>

namespace qsim {

/// Raised when a request would exceed a configured size cap (qubits, wires,
/// SAT variables). Nothing is allocated before the check.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Raised when a state vector's norm has drifted beyond the tolerated bound.
class StateCorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qsim
