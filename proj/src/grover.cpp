#include "qsim/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsim::grover {

Gate oracle_reflection(std::uint64_t x0, int n) { return phase_flip_at(x0, n); }

Circuit diffusion(int n) {
  Circuit c;
  c.reserve(static_cast<std::size_t>(2 * n + 1));
  for (int q = n - 1; q >= 0; --q) c.push_back(u1(q));
  c.push_back(phase_flip_except(0, n));
  for (int q = n - 1; q >= 0; --q) c.push_back(u1(q));
  return c;
}

std::uint64_t grover_iterations(std::uint64_t big_n) {
  if (big_n == 0) throw std::invalid_argument("search space must be non-empty");
  if (big_n == 1) return 0;
  const auto n = static_cast<double>(big_n);
  const double step = std::acos(1.0 - 2.0 / n);
  const double start = std::acos(1.0 / std::sqrt(n));
  return static_cast<std::uint64_t>(std::llround(start / step));
}

std::uint64_t grover_iterations_estimate(std::uint64_t big_n) {
  return static_cast<std::uint64_t>(std::floor(std::numbers::pi * std::sqrt(static_cast<double>(big_n)) / 4.0));
}

PointOracle::PointOracle(std::uint64_t x0, int n) : gate_(std::get<PhaseFlipGate>(phase_flip_at(x0, n))), n_(n) {}

void PointOracle::apply(StateVector& state) {
  ++calls_;
  state.apply(gate_);
}

void grover_step(StateVector& state, PointOracle& oracle, const Circuit& diffusion_circuit) {
  oracle.apply(state);
  state.apply(diffusion_circuit);
}

GroverResult grover_search(int n, std::uint64_t x0, std::mt19937_64& rng, const GroverOptions& options) {
  StateVector state(n, options.sim);
  PointOracle oracle(x0, n);
  for (int q = 0; q < n; ++q) state.apply(u1(q));

  GroverResult result;
  result.run.n = n;
  result.run.target = x0;
  result.run.iterations = options.iterations.value_or(grover_iterations(state.dimension()));
  result.run.success_probability.reserve(result.run.iterations + 1);
  result.run.success_probability.push_back(probability_of(state, x0));

  const Circuit vjv = diffusion(n);
  for (std::uint64_t k = 0; k < result.run.iterations; ++k) {
    grover_step(state, oracle, vjv);
    result.run.success_probability.push_back(probability_of(state, x0));
  }
  result.run.oracle_calls = oracle.calls();

  const MeasurementOutcome outcome = measure(state, rng);
  result.candidate = outcome.basis_index;
  result.success = oracle.is_target(outcome.basis_index);
  return result;
}

}  // namespace qsim::grover
