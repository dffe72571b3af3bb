#include "qsim/state_vector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

void check_capacity(int n_qubits, const SimConfig& config) {
  if (n_qubits < 0) throw std::out_of_range("negative qubit count");
  if (n_qubits > config.max_qubits || n_qubits > 62) {
    throw CapacityError("register of " + std::to_string(n_qubits) + " qubits exceeds the cap of " +
                        std::to_string(config.max_qubits));
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

StateVector::StateVector(int n_qubits, const SimConfig& config) : n_qubits_(n_qubits) {
  check_capacity(n_qubits, config);
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex{});
  amplitudes_[0] = 1.0;
}

Complex StateVector::amplitude(std::uint64_t x) const {
  if (x >= amplitudes_.size()) throw std::out_of_range("basis index out of range");
  return amplitudes_[x];
}

double StateVector::norm_squared() const { return kernels::omp::norm_squared(amplitudes_); }

void StateVector::apply(const Gate& gate) {
  const std::vector<int> touched = gate_qubits(gate);
  std::uint64_t seen = 0;
  for (int q : touched) {
    if (q < 0 || q >= n_qubits_) {
      throw std::out_of_range(gate_name(gate) + " touches qubit " + std::to_string(q) + " of a " +
                              std::to_string(n_qubits_) + "-qubit register");
    }
    if ((seen >> q) & 1U) throw std::invalid_argument(gate_name(gate) + " names qubit " + std::to_string(q) + " twice");
    seen |= std::uint64_t{1} << q;
  }
  namespace k = kernels::omp;
  std::visit(Overloaded{
                 [&](const U1Gate& g) {
                   const double s = 1.0 / std::numbers::sqrt2;
                   k::apply_1q(amplitudes_, g.target, Mat2{s, s, s, -s});
                 },
                 [&](const U2Gate& g) { k::apply_pair_phase(amplitudes_, g.k, g.j, g.phase()); },
                 [&](const NotGate& g) { k::apply_x(amplitudes_, g.target); },
                 [&](const CnotGate& g) { k::apply_cx(amplitudes_, g.control, g.target); },
                 [&](const ToffoliGate& g) {
                   k::apply_ccx(amplitudes_, g.control1, g.control2, g.target);
                 },
                 [&](const SwapGate& g) { k::apply_swap(amplitudes_, g.a, g.b); },
                 [&](const PhaseFlipGate& g) {
                   k::apply_phase_flip(amplitudes_, g.x0, g.width, g.complement);
                 },
                 [&](const PermutationGate& g) {
                   scratch_.resize(amplitudes_.size());
                   k::apply_permutation(amplitudes_, scratch_, g.qubits, *g.table);
                   amplitudes_.swap(scratch_);
                 },
             },
             gate);
}

void StateVector::apply(const Circuit& circuit) {
  for (const Gate& g : circuit) apply(g);
}

StateVector basis_state(int n_qubits, std::uint64_t x, const SimConfig& config) {
  StateVector s(n_qubits, config);
  if (x >= s.dimension()) {
    throw std::out_of_range("basis index " + std::to_string(x) + " outside a " +
                            std::to_string(n_qubits) + "-qubit register");
  }
  auto amps = s.amplitudes();
  amps[0] = 0.0;
  amps[x] = 1.0;
  return s;
}

StateVector uniform_superposition(int n_qubits, const SimConfig& config) {
  StateVector s(n_qubits, config);
  const Complex value = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
  for (Complex& a : s.amplitudes()) a = value;
  return s;
}

StateVector from_amplitudes(std::vector<Complex> amplitudes, const SimConfig& config) {
  const std::size_t size = amplitudes.size();
  if (size == 0 || (size & (size - 1)) != 0) {
    throw std::invalid_argument("amplitude count must be a power of two");
  }
  StateVector s(std::countr_zero(size), config);
  std::copy(amplitudes.begin(), amplitudes.end(), s.amplitudes().begin());
  return s;
}

void apply_gate(StateVector& state, const Gate& gate) { state.apply(gate); }

void apply_circuit(StateVector& state, const Circuit& circuit) { state.apply(circuit); }

double probability_of(const StateVector& state, std::uint64_t x) { return std::norm(state.amplitude(x)); }

MeasurementOutcome measure(StateVector& state, std::mt19937_64& rng) {
  const double total = state.norm_squared();
  const double drift = total - 1.0;
  if (!(std::abs(drift) <= kNormDriftLimit)) {
    throw StateCorruptionError("state norm drifted by " + std::to_string(drift));
  }
  std::uniform_real_distribution<double> uniform(0.0, total);
  const double target = uniform(rng);

  auto amps = state.amplitudes();
  std::uint64_t chosen = amps.size();
  double cumulative = 0.0;
  std::uint64_t last_nonzero = 0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    last_nonzero = i;
    cumulative += p;
    if (target < cumulative) {
      chosen = i;
      break;
    }
  }
  // Rounding can leave target just past the final partial sum.
  if (chosen == amps.size()) chosen = last_nonzero;

  MeasurementOutcome outcome{chosen, std::norm(amps[chosen]), drift};
  std::fill(amps.begin(), amps.end(), Complex{});
  amps[chosen] = 1.0;
  return outcome;
}

StateVector tensor(const StateVector& a, const StateVector& b, const SimConfig& config) {
  StateVector out(a.n_qubits() + b.n_qubits(), config);
  auto dst = out.amplitudes();
  const auto lo = a.amplitudes();
  const auto hi = b.amplitudes();
  for (std::uint64_t y = 0; y < hi.size(); ++y) {
    for (std::uint64_t x = 0; x < lo.size(); ++x) dst[y * lo.size() + x] = lo[x] * hi[y];
  }
  return out;
}

DenseMatrix circuit_operator(const Circuit& circuit, int n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  DenseMatrix m(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    StateVector s = basis_state(n_qubits, x);
    s.apply(circuit);
    const auto amps = s.amplitudes();
    for (std::size_t r = 0; r < dim; ++r) m(r, x) = amps[r];
  }
  return m;
}

}  // namespace qsim
