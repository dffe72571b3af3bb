#pragma once

// Line-oriented circuit format, one gate per line:
//
//   U1 q | U2 k j | U2DAG k j | NOT q | CNOT c t | TOFFOLI a b t | SWAP a b
//
// Blank lines and text after '#' are ignored. Parse errors throw
// CircuitParseError carrying the 1-based line number.

#include <stdexcept>
#include <string>
#include <string_view>

#include "qsim/gates.hpp"

namespace qsim {

class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Circuit parse_circuit(std::string_view text);

/// Inverse of parse_circuit. PHASE_FLIP_AT and PERMUTATION gates have no
/// text form and raise invalid_argument.
std::string format_circuit(const Circuit& circuit);

}  // namespace qsim
