#pragma once

// Single-target Grover search: T = V J V I_F iterated from the uniform
// superposition, with J = -I_delta (delta supported at 0) and V a U1 on
// every qubit.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qsim/gates.hpp"
#include "qsim/state_vector.hpp"

namespace qsim::grover {

/// Diagonal: -1 at x0, +1 elsewhere.
Gate oracle_reflection(std::uint64_t x0, int n);

/// V J V as a gate list: U1 on each qubit, the reflection that keeps |0>
/// and negates everything else, then U1 on each qubit again.
Circuit diffusion(int n);

/// round(phi / phi_N) with cos(phi_N) = 1 - 2/N and phi the angle between
/// the uniform state and the target (cos phi = 1/sqrt(N)). For N = 1 the
/// target is already found and the count is 0.
std::uint64_t grover_iterations(std::uint64_t big_n);

/// floor(pi * sqrt(N) / 4), the asymptotic estimate.
std::uint64_t grover_iterations_estimate(std::uint64_t big_n);

/// Point oracle hiding x0. Every apply() is one query and is counted.
class PointOracle {
 public:
  PointOracle(std::uint64_t x0, int n);

  int n_qubits() const { return n_; }
  void apply(StateVector& state);
  std::uint64_t calls() const { return calls_; }
  /// Only for scoring a finished run; the search itself never reads it.
  bool is_target(std::uint64_t x) const { return x == gate_.x0; }

 private:
  PhaseFlipGate gate_;
  int n_;
  std::uint64_t calls_ = 0;
};

/// One application of T: one oracle query followed by the diffusion.
void grover_step(StateVector& state, PointOracle& oracle, const Circuit& diffusion_circuit);

struct GroverRun {
  int n = 0;
  std::uint64_t target = 0;
  std::uint64_t iterations = 0;
  /// Probability of the target before the first step and after each step;
  /// length iterations + 1.
  std::vector<double> success_probability;
  std::uint64_t oracle_calls = 0;
};

struct GroverResult {
  std::uint64_t candidate = 0;
  bool success = false;
  GroverRun run;
};

struct GroverOptions {
  /// Steps to run; defaults to grover_iterations(2^n).
  std::optional<std::uint64_t> iterations;
  SimConfig sim;
};

/// Runs T from the uniform state, records the per-step success probability
/// and measures. Throws CapacityError if n exceeds options.sim.max_qubits.
GroverResult grover_search(int n, std::uint64_t x0, std::mt19937_64& rng, const GroverOptions& options = {});

}  // namespace qsim::grover
