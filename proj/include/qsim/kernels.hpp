#pragma once

// In-place amplitude kernels over a little-endian state vector: bit q of a
// basis index is the state of qubit q.
//
// Two implementations share one signature set:
//   serial::  straightforward full-index sweeps, kept as the reference.
//   omp::     OpenMP kernels that iterate only over the affected index
//             subspace. These back StateVector::apply.
// Neither validates qubit indices; callers (StateVector, Gate) do.

#include <array>
#include <complex>
#include <cstdint>
#include <span>

namespace qsim {

using Complex = std::complex<double>;
using Amplitudes = std::span<Complex>;
using ConstAmplitudes = std::span<const Complex>;

/// Row-major 2x2 matrix: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

namespace kernels {

namespace serial {

void apply_1q(Amplitudes amps, int q, const Mat2& m);
void apply_x(Amplitudes amps, int q);
/// Multiplies every amplitude whose index has both bits a and b set.
void apply_pair_phase(Amplitudes amps, int a, int b, Complex phase);
void apply_cx(Amplitudes amps, int control, int target);
void apply_ccx(Amplitudes amps, int c1, int c2, int target);
void apply_swap(Amplitudes amps, int a, int b);
/// Negates the amplitude at low-bits value x0 over the first `width` qubits,
/// or, with `complement`, every amplitude except that one.
void apply_phase_flip(Amplitudes amps, std::uint64_t x0, int width, bool complement);
/// out[pi(i)] = in[i], where pi acts on the bits selected by `qubits` through
/// `table` and leaves the remaining bits alone. `out` must not alias `in`.
void apply_permutation(ConstAmplitudes in, Amplitudes out, std::span<const int> qubits,
                       std::span<const std::uint64_t> table);
double norm_squared(ConstAmplitudes amps);

}  // namespace serial

namespace omp {

void apply_1q(Amplitudes amps, int q, const Mat2& m);
void apply_x(Amplitudes amps, int q);
void apply_pair_phase(Amplitudes amps, int a, int b, Complex phase);
void apply_cx(Amplitudes amps, int control, int target);
void apply_ccx(Amplitudes amps, int c1, int c2, int target);
void apply_swap(Amplitudes amps, int a, int b);
void apply_phase_flip(Amplitudes amps, std::uint64_t x0, int width, bool complement);
void apply_permutation(ConstAmplitudes in, Amplitudes out, std::span<const int> qubits,
                       std::span<const std::uint64_t> table);
double norm_squared(ConstAmplitudes amps);

}  // namespace omp

}  // namespace kernels
}  // namespace qsim
