// Serial reference kernels against the OpenMP kernels on one register.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "qsim/kernels.hpp"

namespace {

using qsim::Complex;
using qsim::Mat2;
using namespace qsim::kernels;

std::vector<Complex> make_state(int n) {
  std::vector<Complex> v(std::size_t{1} << n);
  v[0] = 1.0;
  return v;
}

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const Mat2 kHadamard{Complex(kInvSqrt2), Complex(kInvSqrt2), Complex(kInvSqrt2), Complex(-kInvSqrt2)};

template <auto Kernel>
void BM_U1Sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amps = make_state(n);
  for (auto _ : state) {
    for (int q = 0; q < n; ++q) Kernel(amps, q, kHadamard);
    benchmark::ClobberMemory();
  }
  state.SetBytesProcessed(state.iterations() * n * static_cast<std::int64_t>(amps.size() * sizeof(Complex)));
}

template <auto Kernel>
void BM_PairPhase(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amps = make_state(n);
  const Complex phase = std::polar(1.0, std::numbers::pi / 8);
  for (auto _ : state) {
    for (int k = 0; k + 1 < n; ++k) Kernel(amps, k, k + 1, phase);
    benchmark::ClobberMemory();
  }
}

template <auto Kernel>
void BM_Toffoli(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto amps = make_state(n);
  for (auto _ : state) {
    for (int k = 0; k + 2 < n; ++k) Kernel(amps, k, k + 1, k + 2);
    benchmark::ClobberMemory();
  }
}

}  // namespace

BENCHMARK(BM_U1Sweep<serial::apply_1q>)->Name("u1_sweep/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_U1Sweep<omp::apply_1q>)->Name("u1_sweep/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_PairPhase<serial::apply_pair_phase>)->Name("pair_phase/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_PairPhase<omp::apply_pair_phase>)->Name("pair_phase/omp")->DenseRange(12, 20, 4);
BENCHMARK(BM_Toffoli<serial::apply_ccx>)->Name("toffoli/serial")->DenseRange(12, 20, 4);
BENCHMARK(BM_Toffoli<omp::apply_ccx>)->Name("toffoli/omp")->DenseRange(12, 20, 4);
BENCHMARK_MAIN();
