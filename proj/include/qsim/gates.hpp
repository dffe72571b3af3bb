#pragma once

// The gate set: Hadamard-type U1, the controlled dyadic phase U2(k, j),
// classical reversible gates, a point phase flip used as a search oracle and
// the lift of an arbitrary basis permutation to a unitary.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qsim/kernels.hpp"

namespace qsim {

struct U1Gate {
  int target;
};

/// diag(1, 1, 1, exp(i*pi / 2^(j-k))) on the pair (k, j), k < j. The adjoint
/// form conjugates the phase.
struct U2Gate {
  int k;
  int j;
  bool adjoint = false;

  Complex phase() const;
};

struct NotGate {
  int target;
};

struct CnotGate {
  int control;
  int target;
};

struct ToffoliGate {
  int control1;
  int control2;
  int target;
};

struct SwapGate {
  int a;
  int b;
};

/// Diagonal sign flip over qubits [0, width): -1 at basis value x0 and +1
/// elsewhere, or the opposite when `complement` is set.
struct PhaseFlipGate {
  std::uint64_t x0;
  int width;
  bool complement = false;
};

/// |x> -> |table[x]> on the listed qubits (qubits[k] carries bit k of x).
struct PermutationGate {
  std::vector<int> qubits;
  std::shared_ptr<const std::vector<std::uint64_t>> table;
};

using Gate = std::variant<U1Gate, U2Gate, NotGate, CnotGate, ToffoliGate, SwapGate,
                          PhaseFlipGate, PermutationGate>;

/// Plain ordered gate list, applied front to back.
using Circuit = std::vector<Gate>;

// Constructors. Each validates its indices: negative qubit -> out_of_range,
// repeated qubit -> invalid_argument.
Gate u1(int target);
Gate u2(int k, int j);
Gate u2_adjoint(int k, int j);
Gate not_gate(int target);
Gate cnot(int control, int target);
Gate toffoli(int control1, int control2, int target);
Gate swap_gate(int a, int b);
Gate phase_flip_at(std::uint64_t x0, int width);
/// Reflection that keeps |x0> and negates every other basis state.
Gate phase_flip_except(std::uint64_t x0, int width);
/// Throws invalid_argument unless `table` is a bijection on [0, 2^qubits.size()).
Gate permutation_gate(std::vector<std::uint64_t> table, std::vector<int> qubits);
/// Permutation on qubits 0..span-1.
Gate permutation_gate(std::vector<std::uint64_t> table, int span);

/// Qubits touched by the gate, in the order its matrix is indexed
/// (entry k of the list is bit k of the local index).
std::vector<int> gate_qubits(const Gate& gate);

std::string gate_name(const Gate& gate);

/// Inverse gate. Everything except U2 and PERMUTATION is self-inverse.
Gate adjoint(const Gate& gate);

/// Gates reversed and individually inverted.
Circuit inverse(const Circuit& circuit);

/// Dense square matrix, row-major.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<Complex> data;

  explicit DenseMatrix(std::size_t d = 0) : dim(d), data(d * d) {}
  static DenseMatrix identity(std::size_t d);

  Complex& operator()(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix adjoint() const;
  /// Largest entrywise modulus of (this - rhs).
  double max_abs_diff(const DenseMatrix& rhs) const;
};

/// Matrix over the gate's own qubits (2^s x 2^s, s = gate_qubits(g).size()).
DenseMatrix gate_matrix(const Gate& gate);

/// Full 2^n x 2^n operator of a circuit, built column by column by running
/// the circuit on every basis state.
DenseMatrix circuit_operator(const Circuit& circuit, int n_qubits);

}  // namespace qsim
