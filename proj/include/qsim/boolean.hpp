#pragma once

// Classical Boolean layer: straight-line circuits over the basis
// {x, 1, x+y, xy, (x,x)}, multilinear polynomials over F2, SAT instances in
// the (S_i, T_i) clause form, and the Cantor-style numbering of N^2.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsim::boolean {

/// One bit per entry, each 0 or 1.
using Bits = std::vector<std::uint8_t>;

enum class GateKind { kId, kConst1, kXor, kAnd, kFanout };

/// Number of wires the gate creates (FANOUT creates two).
int output_count(GateKind kind);
/// Number of wires the gate reads.
int input_count(GateKind kind);
std::string_view kind_name(GateKind kind);

struct BoolGate {
  GateKind kind;
  int a = -1;  // first input wire (unused by CONST1)
  int b = -1;  // second input wire (XOR, AND only)
};

/// Straight-line circuit. Wires 0..n_inputs-1 are the inputs; every gate
/// appends its output wires in order, so a gate can only read wires that
/// already exist.
class BooleanCircuit {
 public:
  explicit BooleanCircuit(int n_inputs);

  int n_inputs() const { return n_inputs_; }
  int wire_count() const { return wire_count_; }
  const std::vector<BoolGate>& gates() const { return gates_; }
  const std::vector<int>& outputs() const { return outputs_; }

  /// Appends a gate and returns its first output wire. Throws out_of_range
  /// if an input wire does not exist yet.
  int add(BoolGate gate);
  int add_id(int x) { return add({GateKind::kId, x}); }
  int add_const1() { return add({GateKind::kConst1}); }
  int add_xor(int x, int y) { return add({GateKind::kXor, x, y}); }
  int add_and(int x, int y) { return add({GateKind::kAnd, x, y}); }
  /// Returns the first of the two copies; the second is the next wire.
  int add_fanout(int x) { return add({GateKind::kFanout, x}); }

  void set_outputs(std::vector<int> wires);

  /// Sum of output sizes over all gates (FANOUT counts 2).
  int total_gate_output_size() const;

 private:
  int n_inputs_;
  int wire_count_;
  std::vector<BoolGate> gates_;
  std::vector<int> outputs_;
};

/// Evaluates every wire in order and returns the designated outputs.
/// Throws invalid_argument if input.size() != n_inputs().
Bits eval_circuit(const BooleanCircuit& bc, std::span<const std::uint8_t> input);

/// Same, with bit i of `input` feeding wire i; output k is bit k.
std::uint64_t eval_circuit(const BooleanCircuit& bc, std::uint64_t input);

/// Text form:
///   INPUTS m
///   AND a b | XOR a b | ID a | CONST1 | FANOUT a     (one gate per line)
///   OUTPUTS w1 w2 ...
/// '#' starts a comment.
BooleanCircuit parse_boolean_circuit(std::string_view text);
std::string format_boolean_circuit(const BooleanCircuit& bc);

/// Multilinear polynomial over F2. Each monomial is a bitmask of variable
/// indices (bit i = x_{i+1}); the empty mask is the constant 1. Stored as a
/// sorted set, so equality is structural.
class BooleanPolynomial {
 public:
  BooleanPolynomial() = default;
  /// Normalizes: sorts and cancels repeated monomials in pairs.
  explicit BooleanPolynomial(std::vector<std::uint64_t> monomials);

  static BooleanPolynomial constant(bool one);
  static BooleanPolynomial variable(int index);  // 0-based

  const std::vector<std::uint64_t>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }

  /// Value at the point whose coordinate i is bit i of `point`.
  bool evaluate(std::uint64_t point) const;

  BooleanPolynomial operator+(const BooleanPolynomial& rhs) const;
  BooleanPolynomial operator*(const BooleanPolynomial& rhs) const;
  bool operator==(const BooleanPolynomial&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::uint64_t> monomials_;
};

/// The unique multilinear polynomial agreeing with `table` on F2^m, where
/// table.size() == 2^m and entry x is f at the point with coordinates bits(x).
BooleanPolynomial interpolate(std::span<const std::uint8_t> table);

/// Clause (S, T) is violated exactly when every v_k (k in S) is 0 and every
/// v_j (j in T) is 1. Variables are 1-based.
struct Clause {
  std::vector<int> s;
  std::vector<int> t;
};

inline constexpr int kDefaultMaxSatVariables = 24;

struct SatInstance {
  int m = 0;
  std::vector<Clause> clauses;

  /// Throws invalid_argument on m < 0 or a variable index outside 1..m.
  void validate() const;
  /// m times the clause count.
  std::uint64_t size() const;
  /// Every clause has card(S u T) == 3.
  bool is_3sat() const;
};

/// Assignment encoding: bit (k-1) of the mask is v_k.
using Assignment = std::uint64_t;

/// b_u(v) = prod_i (1 + prod_{k in S_i} (1 + v_k) * prod_{j in T_i} v_j) over F2.
bool sat_eval(const SatInstance& u, Assignment v);

/// Lexicographically least satisfying (v_1, ..., v_m) with v_1 most
/// significant, or nullopt. Throws CapacityError when m > max_variables.
std::optional<Assignment> sat_brute_force(const SatInstance& u,
                                          int max_variables = kDefaultMaxSatVariables);

/// JSON: {"m": int, "clauses": [{"S": [ints], "T": [ints]}]}
SatInstance parse_sat_json(std::string_view json_text);
std::string sat_to_json(const SatInstance& u);

/// m + (m+n-1)(m+n-2)/2 for m, n >= 1; a bijection N^2 -> N with (1,1) -> 1.
std::uint64_t pairing(std::uint64_t m, std::uint64_t n);
std::pair<std::uint64_t, std::uint64_t> unpairing(std::uint64_t k);

}  // namespace qsim::boolean
