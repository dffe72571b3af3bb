#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "qsim/kernels.hpp"
#include "qsim/state_vector.hpp"

namespace qsim {
namespace {

using Vec = std::vector<Complex>;

void expect_close(const Vec& a, const Vec& b, double tol = 1e-12) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(std::abs(a[i] - b[i]), tol) << "index " << i;
}

// Runs one kernel through both implementations on the same random state.
template <class SerialFn, class OmpFn>
void compare(int n, SerialFn serial, OmpFn parallel, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Vec a = oracle::random_state(n, rng);
  Vec b = a;
  serial(std::span<Complex>(a));
  parallel(std::span<Complex>(b));
  expect_close(a, b);
}

class KernelAgreement : public ::testing::TestWithParam<int> {};

TEST_P(KernelAgreement, SerialAndOpenMPMatch) {
  const int n = GetParam();
  namespace s = kernels::serial;
  namespace p = kernels::omp;
  const Mat2 m{Complex(0.6, 0.0), Complex(0.0, 0.8), Complex(0.0, 0.8), Complex(0.6, 0.0)};
  for (int q = 0; q < n; ++q) {
    compare(n, [&](auto v) { s::apply_1q(v, q, m); }, [&](auto v) { p::apply_1q(v, q, m); }, 1 + q);
    compare(n, [&](auto v) { s::apply_x(v, q); }, [&](auto v) { p::apply_x(v, q); }, 2 + q);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const Complex phase = std::polar(1.0, 0.3 * (a + 1));
      compare(n, [&](auto v) { s::apply_pair_phase(v, a, b, phase); },
              [&](auto v) { p::apply_pair_phase(v, a, b, phase); }, 3);
      compare(n, [&](auto v) { s::apply_cx(v, a, b); }, [&](auto v) { p::apply_cx(v, a, b); }, 4);
      compare(n, [&](auto v) { s::apply_swap(v, a, b); }, [&](auto v) { p::apply_swap(v, a, b); }, 5);
      for (int t = 0; t < n; ++t) {
        if (t == a || t == b) continue;
        compare(n, [&](auto v) { s::apply_ccx(v, a, b, t); }, [&](auto v) { p::apply_ccx(v, a, b, t); }, 6);
      }
    }
  }
  for (int width = 1; width <= n; ++width) {
    for (bool complement : {false, true}) {
      const std::uint64_t x0 = (std::uint64_t{1} << width) - 1;
      compare(n, [&](auto v) { s::apply_phase_flip(v, x0, width, complement); },
              [&](auto v) { p::apply_phase_flip(v, x0, width, complement); }, 7);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Widths, KernelAgreement, ::testing::Values(3, 5, 7));

TEST(KernelAgreement, LargeRegisterTakesParallelPath) {
  // 2^16 amplitudes crosses the OpenMP threshold for every kernel.
  const int n = 16;
  namespace s = kernels::serial;
  namespace p = kernels::omp;
  const double r = 1.0 / std::sqrt(2.0);
  const Mat2 h{r, r, r, -r};
  compare(n, [&](auto v) { s::apply_1q(v, 9, h); }, [&](auto v) { p::apply_1q(v, 9, h); }, 11);
  compare(n, [&](auto v) { s::apply_pair_phase(v, 2, 15, Complex(0, 1)); },
          [&](auto v) { p::apply_pair_phase(v, 2, 15, Complex(0, 1)); }, 12);
  compare(n, [&](auto v) { s::apply_ccx(v, 0, 14, 7); }, [&](auto v) { p::apply_ccx(v, 0, 14, 7); }, 13);
  compare(n, [&](auto v) { s::apply_phase_flip(v, 5, 16, true); },
          [&](auto v) { p::apply_phase_flip(v, 5, 16, true); }, 14);

  std::mt19937_64 rng(15);
  const Vec in = oracle::random_state(n, rng);
  EXPECT_NEAR(s::norm_squared(in), p::norm_squared(in), 1e-12);
}

TEST(KernelAgreement, PermutationOnScatteredQubits) {
  std::mt19937_64 rng(21);
  const int n = 6;
  const std::vector<int> qubits{4, 1, 3};
  std::vector<std::uint64_t> table{3, 6, 0, 7, 1, 2, 5, 4};
  const Vec in = oracle::random_state(n, rng);
  Vec a(in.size()), b(in.size());
  kernels::serial::apply_permutation(in, a, qubits, table);
  kernels::omp::apply_permutation(in, b, qubits, table);
  expect_close(a, b);

  // Low-prefix fast path.
  const std::vector<int> low{0, 1, 2};
  kernels::serial::apply_permutation(in, a, low, table);
  kernels::omp::apply_permutation(in, b, low, table);
  expect_close(a, b);
}

// Every gate kind, applied through StateVector (OpenMP kernels), equals the
// gate matrix embedded in the full register.
TEST(KernelVsDenseMatrix, AllGateKindsUpToSixQubits) {
  std::mt19937_64 rng(99);
  for (int n = 3; n <= 6; ++n) {
    const std::vector<Gate> gates{
        u1(n - 1),
        u2(0, n - 1),
        u2_adjoint(1, 2),
        not_gate(1),
        cnot(n - 1, 0),
        toffoli(n - 1, 0, 1),
        swap_gate(0, n - 2),
        phase_flip_at(5, 3),
        phase_flip_except(2, n),
        permutation_gate({2, 0, 3, 1}, std::vector<int>{n - 1, 1}),
    };
    for (const Gate& g : gates) {
      const Vec psi = oracle::random_state(n, rng);
      const DenseMatrix full = oracle::embed(gate_matrix(g), gate_qubits(g), n);
      const Vec expected = oracle::mat_vec(full, psi);
      StateVector s = from_amplitudes(psi);
      s.apply(g);
      const Vec got(s.amplitudes().begin(), s.amplitudes().end());
      SCOPED_TRACE(gate_name(g) + " n=" + std::to_string(n));
      expect_close(got, expected);
      EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    }
  }
}

}  // namespace
}  // namespace qsim
