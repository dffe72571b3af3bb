#include "qsim/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsim {

namespace {

void check_qubits(std::initializer_list<int> qubits) {
  for (int q : qubits) {
    if (q < 0) throw std::out_of_range("negative qubit index " + std::to_string(q));
  }
  for (auto a = qubits.begin(); a != qubits.end(); ++a) {
    for (auto b = std::next(a); b != qubits.end(); ++b) {
      if (*a == *b) {
        throw std::invalid_argument("qubit " + std::to_string(*a) + " named twice in one gate");
      }
    }
  }
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

Complex U2Gate::phase() const {
  // exp(i*pi*2^(k-j)); the exponent is exact for any dyadic distance.
  const double angle = std::ldexp(std::numbers::pi, k - j);
  return std::polar(1.0, adjoint ? -angle : angle);
}

Gate u1(int target) {
  check_qubits({target});
  return U1Gate{target};
}

Gate u2(int k, int j) {
  check_qubits({k, j});
  if (k >= j) throw std::invalid_argument("u2 requires k < j");
  return U2Gate{k, j, false};
}

Gate u2_adjoint(int k, int j) {
  check_qubits({k, j});
  if (k >= j) throw std::invalid_argument("u2 requires k < j");
  return U2Gate{k, j, true};
}

Gate not_gate(int target) {
  check_qubits({target});
  return NotGate{target};
}

Gate cnot(int control, int target) {
  check_qubits({control, target});
  return CnotGate{control, target};
}

Gate toffoli(int control1, int control2, int target) {
  check_qubits({control1, control2, target});
  return ToffoliGate{control1, control2, target};
}

Gate swap_gate(int a, int b) {
  check_qubits({a, b});
  return SwapGate{a, b};
}

static PhaseFlipGate make_phase_flip(std::uint64_t x0, int width, bool complement) {
  if (width < 0 || width > 63) throw std::out_of_range("phase flip width out of range");
  if (x0 >> width) throw std::out_of_range("phase flip point outside its register");
  return PhaseFlipGate{x0, width, complement};
}

Gate phase_flip_at(std::uint64_t x0, int width) { return make_phase_flip(x0, width, false); }

Gate phase_flip_except(std::uint64_t x0, int width) { return make_phase_flip(x0, width, true); }

Gate permutation_gate(std::vector<std::uint64_t> table, std::vector<int> qubits) {
  for (int q : qubits) {
    if (q < 0) throw std::out_of_range("negative qubit index " + std::to_string(q));
  }
  std::vector<int> sorted = qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("permutation gate names a qubit twice");
  }
  if (qubits.size() > 40) throw std::invalid_argument("permutation span too wide");
  const std::uint64_t size = std::uint64_t{1} << qubits.size();
  if (table.size() != size) {
    throw std::invalid_argument("permutation table has " + std::to_string(table.size()) +
                                " entries, expected " + std::to_string(size));
  }
  std::vector<bool> hit(size, false);
  for (std::uint64_t image : table) {
    if (image >= size || hit[image]) throw std::invalid_argument("permutation table is not a bijection");
    hit[image] = true;
  }
  return PermutationGate{std::move(qubits),
                         std::make_shared<const std::vector<std::uint64_t>>(std::move(table))};
}

Gate permutation_gate(std::vector<std::uint64_t> table, int span) {
  if (span < 0) throw std::out_of_range("negative permutation span");
  std::vector<int> qubits(static_cast<std::size_t>(span));
  for (int q = 0; q < span; ++q) qubits[static_cast<std::size_t>(q)] = q;
  return permutation_gate(std::move(table), std::move(qubits));
}

std::vector<int> gate_qubits(const Gate& gate) {
  return std::visit(
      Overloaded{
          [](const U1Gate& g) { return std::vector<int>{g.target}; },
          [](const U2Gate& g) { return std::vector<int>{g.k, g.j}; },
          [](const NotGate& g) { return std::vector<int>{g.target}; },
          [](const CnotGate& g) { return std::vector<int>{g.control, g.target}; },
          [](const ToffoliGate& g) { return std::vector<int>{g.control1, g.control2, g.target}; },
          [](const SwapGate& g) { return std::vector<int>{g.a, g.b}; },
          [](const PhaseFlipGate& g) {
            std::vector<int> q(static_cast<std::size_t>(g.width));
            for (int i = 0; i < g.width; ++i) q[static_cast<std::size_t>(i)] = i;
            return q;
          },
          [](const PermutationGate& g) { return g.qubits; },
      },
      gate);
}

std::string gate_name(const Gate& gate) {
  return std::visit(Overloaded{
                        [](const U1Gate&) { return std::string("U1"); },
                        [](const U2Gate& g) { return std::string(g.adjoint ? "U2DAG" : "U2"); },
                        [](const NotGate&) { return std::string("NOT"); },
                        [](const CnotGate&) { return std::string("CNOT"); },
                        [](const ToffoliGate&) { return std::string("TOFFOLI"); },
                        [](const SwapGate&) { return std::string("SWAP"); },
                        [](const PhaseFlipGate&) { return std::string("PHASE_FLIP_AT"); },
                        [](const PermutationGate&) { return std::string("PERMUTATION"); },
                    },
                    gate);
}

Gate adjoint(const Gate& gate) {
  if (const auto* g = std::get_if<U2Gate>(&gate)) return U2Gate{g->k, g->j, !g->adjoint};
  if (const auto* g = std::get_if<PermutationGate>(&gate)) {
    const auto& table = *g->table;
    std::vector<std::uint64_t> inv(table.size());
    for (std::uint64_t x = 0; x < table.size(); ++x) inv[table[x]] = x;
    return PermutationGate{g->qubits, std::make_shared<const std::vector<std::uint64_t>>(std::move(inv))};
  }
  return gate;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out;
  out.reserve(circuit.size());
  for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) out.push_back(adjoint(*it));
  return out;
}

DenseMatrix DenseMatrix::identity(std::size_t d) {
  DenseMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (dim != rhs.dim) throw std::invalid_argument("matrix dimension mismatch");
  DenseMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < dim; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& rhs) const {
  if (dim != rhs.dim) throw std::invalid_argument("matrix dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) worst = std::max(worst, std::abs(data[i] - rhs.data[i]));
  return worst;
}

namespace {

DenseMatrix permutation_matrix(std::size_t dim, auto&& image_of) {
  DenseMatrix m(dim);
  for (std::size_t x = 0; x < dim; ++x) m(image_of(x), x) = 1.0;
  return m;
}

}  // namespace

DenseMatrix gate_matrix(const Gate& gate) {
  return std::visit(
      Overloaded{
          [](const U1Gate&) {
            const double s = 1.0 / std::numbers::sqrt2;
            DenseMatrix m(2);
            m(0, 0) = s;
            m(0, 1) = s;
            m(1, 0) = s;
            m(1, 1) = -s;
            return m;
          },
          [](const U2Gate& g) {
            DenseMatrix m = DenseMatrix::identity(4);
            m(3, 3) = g.phase();
            return m;
          },
          [](const NotGate&) { return permutation_matrix(2, [](std::size_t x) { return x ^ 1U; }); },
          [](const CnotGate&) {
            return permutation_matrix(4, [](std::size_t x) { return (x & 1U) ? x ^ 2U : x; });
          },
          [](const ToffoliGate&) {
            return permutation_matrix(8, [](std::size_t x) { return (x & 3U) == 3U ? x ^ 4U : x; });
          },
          [](const SwapGate&) {
            return permutation_matrix(4, [](std::size_t x) { return ((x & 1U) << 1) | ((x >> 1) & 1U); });
          },
          [](const PhaseFlipGate& g) {
            DenseMatrix m = DenseMatrix::identity(std::size_t{1} << g.width);
            for (std::size_t x = 0; x < m.dim; ++x) {
              if ((x == g.x0) != g.complement) m(x, x) = -1.0;
            }
            return m;
          },
          [](const PermutationGate& g) {
            const auto& table = *g.table;
            return permutation_matrix(table.size(), [&](std::size_t x) { return table[x]; });
          },
      },
      gate);
}

}  // namespace qsim
