#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qsim/gates.hpp"
#include "qsim/kernels.hpp"

namespace qsim {

/// Default ceiling on register width; 2^26 amplitudes is 1 GiB.
inline constexpr int kDefaultMaxQubits = 26;

/// Norm drift (|<psi|psi> - 1|) above which measurement refuses to proceed.
inline constexpr double kNormDriftLimit = 1e-6;

struct SimConfig {
  int max_qubits = kDefaultMaxQubits;
};

struct MeasurementOutcome {
  std::uint64_t basis_index = 0;
  /// |amplitude(basis_index)|^2 before collapse.
  double probability = 0.0;
  /// <psi|psi> - 1 observed before sampling (tolerated below kNormDriftLimit).
  double norm_drift = 0.0;
};

/// Dense state over n qubits. Qubit q is bit q of the basis index; text
/// output prints the most significant qubit first.
class StateVector {
 public:
  /// |0...0> on n qubits. Throws CapacityError if n exceeds config.max_qubits.
  explicit StateVector(int n_qubits, const SimConfig& config = {});

  int n_qubits() const { return n_qubits_; }
  std::uint64_t dimension() const { return amplitudes_.size(); }

  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::span<Complex> amplitudes() { return amplitudes_; }
  Complex amplitude(std::uint64_t x) const;

  /// Bytes held by the amplitude buffer.
  std::size_t memory_bytes() const { return amplitudes_.capacity() * sizeof(Complex); }

  double norm_squared() const;

  /// Applies one gate in place. Throws out_of_range if the gate touches a
  /// qubit >= n_qubits().
  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
  std::vector<Complex> scratch_;  // permutation target buffer, allocated on first use
};

StateVector basis_state(int n_qubits, std::uint64_t x, const SimConfig& config = {});

/// All 2^n amplitudes equal to 1/sqrt(2^n).
StateVector uniform_superposition(int n_qubits, const SimConfig& config = {});

/// Builds a state from explicit amplitudes; the length must be a power of two.
StateVector from_amplitudes(std::vector<Complex> amplitudes, const SimConfig& config = {});

void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

double probability_of(const StateVector& state, std::uint64_t x);

/// Samples a basis index with probability |amplitude|^2 and collapses the
/// state onto it. Throws StateCorruptionError if the norm drifted beyond
/// kNormDriftLimit.
MeasurementOutcome measure(StateVector& state, std::mt19937_64& rng);

/// a (low qubits) tensor b (high qubits): amplitude(y * 2^n_a + x) = a(x) b(y).
StateVector tensor(const StateVector& a, const StateVector& b, const SimConfig& config = {});

}  // namespace qsim
