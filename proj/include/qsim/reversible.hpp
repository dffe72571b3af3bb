#pragma once

// Compilation of a Boolean circuit into a reversible NOT/CNOT/TOFFOLI
// circuit with an uncompute pass, so that on wires (x, y, scratch) it maps
// (x, y, 0) to (x, F(x) + y, 0).

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qsim/boolean.hpp"
#include "qsim/gates.hpp"

namespace qsim::reversible {

enum class RevKind { kNot, kCnot, kToffoli, kSwap };

struct RevGate {
  RevKind kind;
  std::array<int, 3> wires{-1, -1, -1};  // kNot: {t}; kCnot: {c, t}; kToffoli: {c1, c2, t}; kSwap: {a, b}

  bool operator==(const RevGate&) const = default;
};

int arity(RevKind kind);

/// Default wire cap: simulation packs wires into a 64-bit word.
inline constexpr int kDefaultMaxWires = 64;

/// Wires [0, m) hold x, [m, m+n) hold y, [m+n, m+n+scratch) are scratch.
class ReversibleCircuit {
 public:
  ReversibleCircuit(int input_wires, int output_wires, int scratch_wires);

  int input_wires() const { return input_wires_; }
  int output_wires() const { return output_wires_; }
  int scratch_wires() const { return scratch_wires_; }
  int wire_count() const { return input_wires_ + output_wires_ + scratch_wires_; }

  const std::vector<RevGate>& gates() const { return gates_; }

  /// Throws out_of_range for a wire outside the circuit and invalid_argument
  /// for a wire repeated within the gate.
  void add(RevGate gate);

  bool operator==(const ReversibleCircuit&) const = default;

 private:
  int input_wires_;
  int output_wires_;
  int scratch_wires_;
  std::vector<RevGate> gates_;
};

struct CompileOptions {
  int max_wires = kDefaultMaxWires;
};

/// Forward pass (one reversible counterpart per gate, each writing a fresh
/// zero scratch wire), n CNOTs copying the result into y, then the forward
/// pass mirrored to clear the scratch register. Throws CapacityError if the
/// wire total exceeds options.max_wires.
ReversibleCircuit compile(const boolean::BooleanCircuit& bc, const CompileOptions& options = {});

/// Bit i of `bits` is wire i.
std::uint64_t simulate(const ReversibleCircuit& rc, std::uint64_t bits);
boolean::Bits simulate(const ReversibleCircuit& rc, std::span<const std::uint8_t> bits);

/// Same gates in reverse order (every gate is an involution).
ReversibleCircuit invert(const ReversibleCircuit& rc);

/// PERMUTATION gate over qubits 0..wire_count-1 whose table is simulate().
Gate lift_to_unitary(const ReversibleCircuit& rc);

/// The gate list in the circuit text format, preceded by a comment header
/// giving the register layout.
std::string format_reversible(const ReversibleCircuit& rc);

/// Gate-level translation into the quantum gate set.
Circuit to_circuit(const ReversibleCircuit& rc);

struct ContractReport {
  bool holds = true;
  std::uint64_t inputs_checked = 0;
  /// First (x, y) where the contract failed, if any; packed as x | y << m.
  std::uint64_t first_failure = 0;
};

/// Exhaustively checks H(x, y, 0) = (x, F(x) + y, 0) over all (x, y).
ContractReport check_contract(const boolean::BooleanCircuit& bc, const ReversibleCircuit& rc);

/// Whether simulate(rc, .) is injective on all 2^wire_count inputs.
bool is_bijective(const ReversibleCircuit& rc);

}  // namespace qsim::reversible
