#include "qsim/kernels.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace qsim::kernels {

namespace {

using Index = std::uint64_t;

constexpr Index bit(int q) { return Index{1} << q; }

// Scatters `value`'s low bits into the positions selected by `qubits`.
Index deposit(Index value, std::span<const int> qubits) {
  Index out = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if ((value >> k) & 1U) out |= bit(qubits[k]);
  }
  return out;
}

Index extract(Index index, std::span<const int> qubits) {
  Index out = 0;
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    out |= ((index >> qubits[k]) & 1U) << k;
  }
  return out;
}

bool is_low_prefix(std::span<const int> qubits) {
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    if (qubits[k] != static_cast<int>(k)) return false;
  }
  return true;
}

// Inserts a zero bit at position q.
constexpr Index insert_zero(Index i, int q) {
  const Index low = i & (bit(q) - 1);
  return ((i >> q) << (q + 1)) | low;
}

// Inserts zero bits at the (distinct) positions, lowest first.
template <std::size_t K>
Index insert_zeros(Index i, std::array<int, K> positions) {
  std::sort(positions.begin(), positions.end());
  for (int q : positions) i = insert_zero(i, q);
  return i;
}

// Below this many amplitudes the OpenMP kernels run on one thread.
constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 14;

}  // namespace

// ---------------------------------------------------------------------------
// serial reference
// ---------------------------------------------------------------------------
namespace serial {

void apply_1q(Amplitudes amps, int q, const Mat2& m) {
  const Index mask = bit(q);
  for (Index i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | mask];
    amps[i] = m[0] * a0 + m[1] * a1;
    amps[i | mask] = m[2] * a0 + m[3] * a1;
  }
}

void apply_x(Amplitudes amps, int q) {
  const Index mask = bit(q);
  for (Index i = 0; i < amps.size(); ++i) {
    if (!(i & mask)) std::swap(amps[i], amps[i | mask]);
  }
}

void apply_pair_phase(Amplitudes amps, int a, int b, Complex phase) {
  const Index mask = bit(a) | bit(b);
  for (Index i = 0; i < amps.size(); ++i) {
    if ((i & mask) == mask) amps[i] *= phase;
  }
}

void apply_cx(Amplitudes amps, int control, int target) {
  const Index c = bit(control);
  const Index t = bit(target);
  for (Index i = 0; i < amps.size(); ++i) {
    if ((i & c) && !(i & t)) std::swap(amps[i], amps[i | t]);
  }
}

void apply_ccx(Amplitudes amps, int c1, int c2, int target) {
  const Index c = bit(c1) | bit(c2);
  const Index t = bit(target);
  for (Index i = 0; i < amps.size(); ++i) {
    if ((i & c) == c && !(i & t)) std::swap(amps[i], amps[i | t]);
  }
}

void apply_swap(Amplitudes amps, int a, int b) {
  const Index ma = bit(a);
  const Index mb = bit(b);
  for (Index i = 0; i < amps.size(); ++i) {
    if ((i & ma) && !(i & mb)) std::swap(amps[i], amps[(i & ~ma) | mb]);
  }
}

void apply_phase_flip(Amplitudes amps, std::uint64_t x0, int width, bool complement) {
  const Index low = bit(width) - 1;
  for (Index i = 0; i < amps.size(); ++i) {
    if (((i & low) == x0) != complement) amps[i] = -amps[i];
  }
}

void apply_permutation(ConstAmplitudes in, Amplitudes out, std::span<const int> qubits,
                       std::span<const std::uint64_t> table) {
  Index span_mask = 0;
  for (int q : qubits) span_mask |= bit(q);
  for (Index i = 0; i < in.size(); ++i) {
    const Index image = table[extract(i, qubits)];
    out[(i & ~span_mask) | deposit(image, qubits)] = in[i];
  }
}

double norm_squared(ConstAmplitudes amps) {
  double sum = 0.0;
  for (const Complex& a : amps) sum += std::norm(a);
  return sum;
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP kernels
// ---------------------------------------------------------------------------
namespace omp {

void apply_1q(Amplitudes amps, int q, const Mat2& m) {
  const Index mask = bit(q);
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (half >= kParallelThreshold)
  for (std::int64_t k = 0; k < half; ++k) {
    const Index i0 = insert_zero(static_cast<Index>(k), q);
    const Index i1 = i0 | mask;
    const Complex a0 = data[i0];
    const Complex a1 = data[i1];
    data[i0] = m[0] * a0 + m[1] * a1;
    data[i1] = m[2] * a0 + m[3] * a1;
  }
}

void apply_x(Amplitudes amps, int q) {
  const Index mask = bit(q);
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (half >= kParallelThreshold)
  for (std::int64_t k = 0; k < half; ++k) {
    const Index i0 = insert_zero(static_cast<Index>(k), q);
    std::swap(data[i0], data[i0 | mask]);
  }
}

void apply_pair_phase(Amplitudes amps, int a, int b, Complex phase) {
  const Index mask = bit(a) | bit(b);
  const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (quarter >= kParallelThreshold)
  for (std::int64_t k = 0; k < quarter; ++k) {
    data[insert_zeros<2>(static_cast<Index>(k), {a, b}) | mask] *= phase;
  }
}

void apply_cx(Amplitudes amps, int control, int target) {
  const Index c = bit(control);
  const Index t = bit(target);
  const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (quarter >= kParallelThreshold)
  for (std::int64_t k = 0; k < quarter; ++k) {
    const Index i = insert_zeros<2>(static_cast<Index>(k), {control, target}) | c;
    std::swap(data[i], data[i | t]);
  }
}

void apply_ccx(Amplitudes amps, int c1, int c2, int target) {
  const Index c = bit(c1) | bit(c2);
  const Index t = bit(target);
  const auto eighth = static_cast<std::int64_t>(amps.size() / 8);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (eighth >= kParallelThreshold)
  for (std::int64_t k = 0; k < eighth; ++k) {
    const Index i = insert_zeros<3>(static_cast<Index>(k), {c1, c2, target}) | c;
    std::swap(data[i], data[i | t]);
  }
}

void apply_swap(Amplitudes amps, int a, int b) {
  const Index ma = bit(a);
  const Index mb = bit(b);
  const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
  Complex* data = amps.data();
#pragma omp parallel for schedule(static) if (quarter >= kParallelThreshold)
  for (std::int64_t k = 0; k < quarter; ++k) {
    const Index i = insert_zeros<2>(static_cast<Index>(k), {a, b});
    std::swap(data[i | ma], data[i | mb]);
  }
}

void apply_phase_flip(Amplitudes amps, std::uint64_t x0, int width, bool complement) {
  const auto size = static_cast<std::int64_t>(amps.size());
  Complex* data = amps.data();
  if (!complement) {
    const auto blocks = size >> width;
    for (std::int64_t h = 0; h < blocks; ++h) {
      const Index i = (static_cast<Index>(h) << width) | x0;
      data[i] = -data[i];
    }
    return;
  }
  const Index low = bit(width) - 1;
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
  for (std::int64_t k = 0; k < size; ++k) {
    if ((static_cast<Index>(k) & low) != x0) data[k] = -data[k];
  }
}

void apply_permutation(ConstAmplitudes in, Amplitudes out, std::span<const int> qubits,
                       std::span<const std::uint64_t> table) {
  const auto size = static_cast<std::int64_t>(in.size());
  const Complex* src = in.data();
  Complex* dst = out.data();
  if (is_low_prefix(qubits)) {
    const Index low = bit(static_cast<int>(qubits.size())) - 1;
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
    for (std::int64_t k = 0; k < size; ++k) {
      const Index i = static_cast<Index>(k);
      dst[(i & ~low) | table[i & low]] = src[k];
    }
    return;
  }
  Index span_mask = 0;
  for (int q : qubits) span_mask |= bit(q);
#pragma omp parallel for schedule(static) if (size >= kParallelThreshold)
  for (std::int64_t k = 0; k < size; ++k) {
    const Index i = static_cast<Index>(k);
    dst[(i & ~span_mask) | deposit(table[extract(i, qubits)], qubits)] = src[k];
  }
}

double norm_squared(ConstAmplitudes amps) {
  const auto size = static_cast<std::int64_t>(amps.size());
  const Complex* data = amps.data();
  double sum = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : sum) if (size >= kParallelThreshold)
  for (std::int64_t k = 0; k < size; ++k) sum += std::norm(data[k]);
  return sum;
}

}  // namespace omp

}  // namespace qsim::kernels
