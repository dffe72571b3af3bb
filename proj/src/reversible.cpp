#include "qsim/reversible.hpp"

#include <sstream>
#include <stdexcept>

#include "qsim/errors.hpp"

namespace qsim::reversible {

using boolean::BooleanCircuit;
using boolean::GateKind;

int arity(RevKind kind) {
  switch (kind) {
    case RevKind::kNot: return 1;
    case RevKind::kToffoli: return 3;
    default: return 2;
  }
}

ReversibleCircuit::ReversibleCircuit(int input_wires, int output_wires, int scratch_wires)
    : input_wires_(input_wires), output_wires_(output_wires), scratch_wires_(scratch_wires) {
  if (input_wires < 0 || output_wires < 0 || scratch_wires < 0) {
    throw std::invalid_argument("negative register size");
  }
}

void ReversibleCircuit::add(RevGate gate) {
  const int k = arity(gate.kind);
  for (int i = 0; i < k; ++i) {
    const int w = gate.wires[static_cast<std::size_t>(i)];
    if (w < 0 || w >= wire_count()) throw std::out_of_range("wire " + std::to_string(w) + " out of range");
    for (int j = 0; j < i; ++j) {
      if (gate.wires[static_cast<std::size_t>(j)] == w) {
        throw std::invalid_argument("wire " + std::to_string(w) + " repeated within one gate");
      }
    }
  }
  for (int i = k; i < 3; ++i) gate.wires[static_cast<std::size_t>(i)] = -1;
  gates_.push_back(gate);
}

ReversibleCircuit compile(const BooleanCircuit& bc, const CompileOptions& options) {
  const int m = bc.n_inputs();
  const int n = static_cast<int>(bc.outputs().size());

  // Scratch demand: one fresh wire per gate output, except ID (alias), a
  // FANOUT's first copy (alias of its input) and x + x (constant zero).
  int scratch = 0;
  for (const auto& g : bc.gates()) {
    switch (g.kind) {
      case GateKind::kId: break;
      case GateKind::kFanout: scratch += 1; break;
      case GateKind::kXor:
        if (g.a != g.b) scratch += 1;
        break;
      default: scratch += 1; break;
    }
  }
  const long long total = static_cast<long long>(m) + n + scratch;
  if (total > options.max_wires) {
    throw CapacityError("compiled circuit needs " + std::to_string(total) + " wires; cap is " +
                        std::to_string(options.max_wires));
  }

  // Physical wire carrying each logical wire of bc. Wires holding a
  // constant zero (x + x) have no physical wire: marked kZero.
  constexpr int kZero = -1;
  std::vector<int> phys(static_cast<std::size_t>(bc.wire_count()), kZero);
  for (int i = 0; i < m; ++i) phys[static_cast<std::size_t>(i)] = i;

  ReversibleCircuit forward(m, n, scratch);
  int next_scratch = m + n;
  std::size_t logical = static_cast<std::size_t>(m);
  auto fresh = [&] { return next_scratch++; };
  // Writes the XOR of the given physical sources into a fresh wire.
  auto copy_into = [&](int target, std::initializer_list<int> sources) {
    for (int s : sources) {
      if (s != kZero) forward.add({RevKind::kCnot, {s, target}});
    }
  };

  for (const auto& g : bc.gates()) {
    const int a = g.a >= 0 ? phys[static_cast<std::size_t>(g.a)] : kZero;
    const int b = g.b >= 0 ? phys[static_cast<std::size_t>(g.b)] : kZero;
    switch (g.kind) {
      case GateKind::kId:
        phys[logical++] = a;
        break;
      case GateKind::kConst1: {
        const int t = fresh();
        forward.add({RevKind::kNot, {t}});
        phys[logical++] = t;
        break;
      }
      case GateKind::kXor: {
        if (g.a == g.b) {
          phys[logical++] = kZero;
          break;
        }
        const int t = fresh();
        copy_into(t, {a, b});
        phys[logical++] = t;
        break;
      }
      case GateKind::kAnd: {
        const int t = fresh();
        if (a != kZero && b != kZero) {
          if (a == b) {
            forward.add({RevKind::kCnot, {a, t}});
          } else {
            forward.add({RevKind::kToffoli, {a, b, t}});
          }
        }
        phys[logical++] = t;
        break;
      }
      case GateKind::kFanout: {
        const int t = fresh();
        copy_into(t, {a});
        phys[logical++] = a;
        phys[logical++] = t;
        break;
      }
    }
  }

  ReversibleCircuit rc(m, n, scratch);
  for (const RevGate& g : forward.gates()) rc.add(g);
  for (int k = 0; k < n; ++k) {
    const int src = phys[static_cast<std::size_t>(bc.outputs()[static_cast<std::size_t>(k)])];
    if (src != kZero) rc.add({RevKind::kCnot, {src, m + k}});
  }
  const auto& fw = forward.gates();
  for (auto it = fw.rbegin(); it != fw.rend(); ++it) rc.add(*it);
  return rc;
}

namespace {

std::uint64_t apply_gate(const RevGate& g, std::uint64_t bits) {
  auto bit = [&](int w) { return (bits >> w) & 1U; };
  switch (g.kind) {
    case RevKind::kNot: return bits ^ (std::uint64_t{1} << g.wires[0]);
    case RevKind::kCnot: return bits ^ (bit(g.wires[0]) << g.wires[1]);
    case RevKind::kToffoli: return bits ^ ((bit(g.wires[0]) & bit(g.wires[1])) << g.wires[2]);
    case RevKind::kSwap: {
      const std::uint64_t diff = bit(g.wires[0]) ^ bit(g.wires[1]);
      return bits ^ (diff << g.wires[0]) ^ (diff << g.wires[1]);
    }
  }
  return bits;
}

}  // namespace

std::uint64_t simulate(const ReversibleCircuit& rc, std::uint64_t bits) {
  for (const RevGate& g : rc.gates()) bits = apply_gate(g, bits);
  return bits;
}

boolean::Bits simulate(const ReversibleCircuit& rc, std::span<const std::uint8_t> bits) {
  if (bits.size() != static_cast<std::size_t>(rc.wire_count())) {
    throw std::invalid_argument("expected " + std::to_string(rc.wire_count()) + " bits");
  }
  if (rc.wire_count() > 64) throw CapacityError("simulation supports at most 64 wires");
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) packed |= std::uint64_t{bits[i] & 1U} << i;
  packed = simulate(rc, packed);
  boolean::Bits out(bits.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (packed >> i) & 1U;
  return out;
}

ReversibleCircuit invert(const ReversibleCircuit& rc) {
  ReversibleCircuit out(rc.input_wires(), rc.output_wires(), rc.scratch_wires());
  const auto& gates = rc.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.add(*it);
  return out;
}

Gate lift_to_unitary(const ReversibleCircuit& rc) {
  if (rc.wire_count() > 30) throw CapacityError("permutation lift supports at most 30 wires");
  const std::uint64_t size = std::uint64_t{1} << rc.wire_count();
  std::vector<std::uint64_t> table(size);
  for (std::uint64_t b = 0; b < size; ++b) table[b] = simulate(rc, b);
  return permutation_gate(std::move(table), rc.wire_count());
}

Circuit to_circuit(const ReversibleCircuit& rc) {
  Circuit out;
  out.reserve(rc.gates().size());
  for (const RevGate& g : rc.gates()) {
    switch (g.kind) {
      case RevKind::kNot: out.push_back(not_gate(g.wires[0])); break;
      case RevKind::kCnot: out.push_back(cnot(g.wires[0], g.wires[1])); break;
      case RevKind::kToffoli: out.push_back(toffoli(g.wires[0], g.wires[1], g.wires[2])); break;
      case RevKind::kSwap: out.push_back(swap_gate(g.wires[0], g.wires[1])); break;
    }
  }
  return out;
}

std::string format_reversible(const ReversibleCircuit& rc) {
  static constexpr const char* kNames[] = {"NOT", "CNOT", "TOFFOLI", "SWAP"};
  std::ostringstream out;
  out << "# wires " << rc.wire_count() << ": x[0," << rc.input_wires() << ") y[" << rc.input_wires() << ','
      << rc.input_wires() + rc.output_wires() << ") scratch[" << rc.input_wires() + rc.output_wires() << ','
      << rc.wire_count() << ")\n";
  for (const RevGate& g : rc.gates()) {
    out << kNames[static_cast<int>(g.kind)];
    for (int i = 0; i < arity(g.kind); ++i) out << ' ' << g.wires[static_cast<std::size_t>(i)];
    out << '\n';
  }
  return out.str();
}

ContractReport check_contract(const BooleanCircuit& bc, const ReversibleCircuit& rc) {
  const int m = bc.n_inputs();
  const int n = static_cast<int>(bc.outputs().size());
  if (rc.input_wires() != m || rc.output_wires() != n) {
    throw std::invalid_argument("reversible circuit registers do not match the Boolean circuit");
  }
  if (m + n > 30 || rc.wire_count() > 64) throw CapacityError("contract check too large");
  ContractReport report;
  const std::uint64_t xs = std::uint64_t{1} << m;
  const std::uint64_t ys = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < xs; ++x) {
    const std::uint64_t fx = boolean::eval_circuit(bc, x);
    for (std::uint64_t y = 0; y < ys; ++y) {
      const std::uint64_t in = x | (y << m);
      const std::uint64_t expected = x | ((fx ^ y) << m);
      ++report.inputs_checked;
      if (simulate(rc, in) != expected && report.holds) {
        report.holds = false;
        report.first_failure = in;
      }
    }
  }
  return report;
}

bool is_bijective(const ReversibleCircuit& rc) {
  if (rc.wire_count() > 30) throw CapacityError("bijectivity check supports at most 30 wires");
  const std::uint64_t size = std::uint64_t{1} << rc.wire_count();
  std::vector<bool> seen(size, false);
  for (std::uint64_t b = 0; b < size; ++b) {
    const std::uint64_t image = simulate(rc, b);
    if (seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

}  // namespace qsim::reversible
