#pragma once

#include <cstdint>

#include "qsim/gates.hpp"

namespace qsim::qft {

/// Reverses the low n bits of x.
std::uint64_t bit_reverse(std::uint64_t x, int n);

/// Entry (c, x) = exp(2*pi*i*c*x / N) / sqrt(N), N = 2^n.
DenseMatrix dft_matrix(int n);

struct QftCircuit {
  int n = 0;
  Circuit gates;
};

/// O(n^2) circuit of U1 and U2 gates mapping |x> to
/// sum_c exp(2*pi*i*c*x/N) |bitrev(c)> / sqrt(N) on qubits
/// first_qubit .. first_qubit+n-1. Gate count n + n(n-1)/2.
QftCircuit qft_circuit_bitrev(int n, int first_qubit = 0);

/// qft_circuit_bitrev followed by floor(n/2) SWAPs undoing the reversal;
/// implements dft_matrix(n) exactly.
QftCircuit qft_circuit(int n, int first_qubit = 0);

}  // namespace qsim::qft
