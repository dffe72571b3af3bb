#include "qsim/qft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qsim::qft {

std::uint64_t bit_reverse(std::uint64_t x, int n) {
  if (n < 0 || n > 64) throw std::out_of_range("bit_reverse width out of range");
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i) out |= ((x >> i) & 1U) << (n - 1 - i);
  return out;
}

DenseMatrix dft_matrix(int n) {
  if (n < 0 || n > 14) throw std::out_of_range("dft_matrix supports 0 <= n <= 14");
  const std::size_t dim = std::size_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  DenseMatrix m(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t x = 0; x < dim; ++x) {
      // c*x mod N keeps the angle exact in [0, 2*pi).
      const auto k = static_cast<double>((c * x) & (dim - 1));
      m(c, x) = std::polar(scale, 2.0 * std::numbers::pi * k / static_cast<double>(dim));
    }
  }
  return m;
}

QftCircuit qft_circuit_bitrev(int n, int first_qubit) {
  if (n < 0) throw std::invalid_argument("negative QFT width");
  QftCircuit out{n, {}};
  out.gates.reserve(static_cast<std::size_t>(n + n * (n - 1) / 2));
  // prod_{k=0}^{n-1} ( U1(k) prod_{j>k} U2(k,j) ) read as an operator
  // product: the rightmost factor acts first, so k runs from n-1 down and
  // each U1(k) follows the pair phases it multiplies on the right.
  for (int k = n - 1; k >= 0; --k) {
    for (int j = k + 1; j < n; ++j) out.gates.push_back(u2(first_qubit + k, first_qubit + j));
    out.gates.push_back(u1(first_qubit + k));
  }
  return out;
}

QftCircuit qft_circuit(int n, int first_qubit) {
  QftCircuit out = qft_circuit_bitrev(n, first_qubit);
  for (int k = 0; k < n / 2; ++k) out.gates.push_back(swap_gate(first_qubit + k, first_qubit + n - 1 - k));
  return out;
}

}  // namespace qsim::qft
