#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>

#include "qsim/circuit_text.hpp"
#include "qsim/gates.hpp"
#include "qsim/state_vector.hpp"

namespace qsim {
namespace {

constexpr double kTol = 1e-12;

double unitarity_error(const DenseMatrix& m) {
  return (m * m.adjoint()).max_abs_diff(DenseMatrix::identity(m.dim));
}

TEST(U1, MatrixIsNormalizedHadamard) {
  const DenseMatrix m = gate_matrix(u1(0));
  const double r = 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(std::abs(m(0, 0) - r), 0.0, kTol);
  EXPECT_NEAR(std::abs(m(0, 1) - r), 0.0, kTol);
  EXPECT_NEAR(std::abs(m(1, 0) - r), 0.0, kTol);
  EXPECT_NEAR(std::abs(m(1, 1) + r), 0.0, kTol);
}

TEST(U1, IsAnInvolutionWithDeterminantMinusOne) {
  const DenseMatrix m = gate_matrix(u1(0));
  EXPECT_LT((m * m).max_abs_diff(DenseMatrix::identity(2)), kTol);
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  EXPECT_NEAR(std::abs(det + 1.0), 0.0, kTol);
}

TEST(U2, PhaseDependsOnQubitDistance) {
  EXPECT_NEAR(std::abs(std::get<U2Gate>(u2(0, 1)).phase() - Complex(0, 1)), 0.0, kTol);
  EXPECT_NEAR(std::abs(std::get<U2Gate>(u2(0, 3)).phase() - std::polar(1.0, std::numbers::pi / 8)), 0.0, kTol);
  EXPECT_NEAR(std::abs(std::get<U2Gate>(u2(4, 5)).phase() - Complex(0, 1)), 0.0, kTol);
}

TEST(U2, AppliedTwiceOnNeighboursNegatesEleven) {
  for (int k = 0; k < 4; ++k) {
    StateVector s = basis_state(5, (3U << k));
    s.apply(u2(k, k + 1));
    s.apply(u2(k, k + 1));
    EXPECT_NEAR(std::abs(s.amplitude(3U << k) + 1.0), 0.0, kTol);
  }
}

TEST(U2, RequiresOrderedPair) {
  EXPECT_THROW(u2(1, 1), std::invalid_argument);
  EXPECT_THROW(u2(3, 1), std::invalid_argument);
  EXPECT_THROW(u2(-1, 1), std::out_of_range);
}

TEST(GateMatrix, Examples) {
  const DenseMatrix x = gate_matrix(not_gate(0));
  EXPECT_EQ(x(0, 1), Complex(1.0));
  EXPECT_EQ(x(1, 0), Complex(1.0));
  EXPECT_EQ(x(0, 0), Complex(0.0));

  // Controls occupy local bits 0 and 1, so the target flips between 3 and 7.
  const DenseMatrix t = gate_matrix(toffoli(0, 1, 2));
  for (std::size_t c = 0; c < 8; ++c) {
    const std::size_t image = c == 3 ? 7 : c == 7 ? 3 : c;
    for (std::size_t r = 0; r < 8; ++r) EXPECT_EQ(t(r, c), Complex(r == image ? 1.0 : 0.0));
  }

  const DenseMatrix d = gate_matrix(u2(0, 1));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(d(i, i) - (i == 3 ? Complex(0, 1) : Complex(1))), 0.0, kTol);
  }
}

TEST(GateMatrix, EveryConstructorIsUnitary) {
  const std::vector<Gate> gates{u1(0),       u2(0, 1),          u2(2, 9),          u2_adjoint(0, 2),
                                not_gate(0), cnot(0, 1),        toffoli(0, 1, 2),  swap_gate(0, 1),
                                phase_flip_at(3, 3), phase_flip_except(0, 4), permutation_gate({2, 3, 1, 0}, 2)};
  for (const Gate& g : gates) EXPECT_LT(unitarity_error(gate_matrix(g)), kTol) << gate_name(g);
}

TEST(GateMatrix, ClassicalGatesAreInvolutions) {
  for (const Gate& g : {not_gate(0), cnot(0, 1), toffoli(0, 1, 2), swap_gate(0, 1)}) {
    const DenseMatrix m = gate_matrix(g);
    EXPECT_LT((m * m).max_abs_diff(DenseMatrix::identity(m.dim)), kTol) << gate_name(g);
  }
}

TEST(PermutationGate, IdentityTable) {
  const DenseMatrix m = gate_matrix(permutation_gate({0, 1, 2, 3}, 2));
  EXPECT_LT(m.max_abs_diff(DenseMatrix::identity(4)), kTol);
}

TEST(PermutationGate, TwoCycleIsNot) {
  EXPECT_LT(gate_matrix(permutation_gate({1, 0}, 1)).max_abs_diff(gate_matrix(not_gate(0))), kTol);
}

TEST(PermutationGate, LiftedAndIsToffoli) {
  // (x, y) -> (x, AND(x) xor y) with x in bits 0..1 and y in bit 2.
  std::vector<std::uint64_t> table(8);
  for (std::uint64_t i = 0; i < 8; ++i) {
    const std::uint64_t x = i & 3U;
    const std::uint64_t y = i >> 2;
    const std::uint64_t f = (x & 1U) & (x >> 1);
    table[i] = x | ((y ^ f) << 2);
  }
  EXPECT_LT(gate_matrix(permutation_gate(table, 3)).max_abs_diff(gate_matrix(toffoli(0, 1, 2))), kTol);
}

TEST(PermutationGate, RejectsNonBijection) {
  EXPECT_THROW(permutation_gate({0, 0, 1, 2}, 2), std::invalid_argument);
  EXPECT_THROW(permutation_gate({0, 1, 2, 4}, 2), std::invalid_argument);
  EXPECT_THROW(permutation_gate({0, 1, 2}, 2), std::invalid_argument);
  EXPECT_THROW(permutation_gate({0, 1, 2, 3}, std::vector<int>{1, 1}), std::invalid_argument);
}

TEST(PermutationGate, ComposedWithInverseIsIdentity) {
  std::mt19937_64 rng(4);
  for (int span = 1; span <= 5; ++span) {
    std::vector<std::uint64_t> table(std::size_t{1} << span);
    std::iota(table.begin(), table.end(), 0);
    std::shuffle(table.begin(), table.end(), rng);
    const Gate g = permutation_gate(table, span);
    const Gate inv = adjoint(g);
    for (std::uint64_t x = 0; x < table.size(); ++x) {
      StateVector s = basis_state(span, x);
      s.apply(g);
      s.apply(inv);
      EXPECT_EQ(s.amplitude(x), Complex(1.0));
    }
  }
}

TEST(Inverse, ReversesAndConjugates) {
  const Circuit c{u1(0), u2(0, 2), cnot(1, 2), u2(1, 2)};
  const Circuit inv = inverse(c);
  ASSERT_EQ(inv.size(), 4U);
  EXPECT_TRUE(std::get<U2Gate>(inv[0]).adjoint);
  EXPECT_TRUE(std::holds_alternative<U1Gate>(inv[3]));
  Circuit both = c;
  both.insert(both.end(), inv.begin(), inv.end());
  EXPECT_LT(circuit_operator(both, 3).max_abs_diff(DenseMatrix::identity(8)), kTol);
}

TEST(CircuitText, ParsesEveryGateLine) {
  const Circuit c = parse_circuit(
      "# demo\n"
      "U1 0\n"
      "U2 0 2   # phase\n"
      "\n"
      "NOT 1\r\n"
      "CNOT 0 1\n"
      "TOFFOLI 0 1 2\n"
      "SWAP 1 2\n"
      "U2DAG 1 2\n");
  ASSERT_EQ(c.size(), 7U);
  EXPECT_EQ(format_circuit(c), "U1 0\nU2 0 2\nNOT 1\nCNOT 0 1\nTOFFOLI 0 1 2\nSWAP 1 2\nU2DAG 1 2\n");
  EXPECT_EQ(format_circuit(parse_circuit(format_circuit(c))), format_circuit(c));
}

TEST(CircuitText, ReportsLineOfError) {
  try {
    parse_circuit("U1 0\nFOO 1\n");
    FAIL() << "expected a parse error";
  } catch (const CircuitParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_circuit("CNOT 1 1\n"), CircuitParseError);
  EXPECT_THROW(parse_circuit("U2 2 1\n"), CircuitParseError);
  EXPECT_THROW(parse_circuit("U1\n"), CircuitParseError);
  EXPECT_THROW(parse_circuit("U1 -3\n"), CircuitParseError);
  EXPECT_THROW(format_circuit({phase_flip_at(0, 1)}), std::invalid_argument);
}

}  // namespace
}  // namespace qsim
