#pragma once

// Independent reference computations used by the unit and acceptance
// suites. Nothing here calls the code path it is used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "qsim/boolean.hpp"
#include "qsim/gates.hpp"
#include "qsim/shor.hpp"

namespace qsim::oracle {

/// 2^n x 2^n operator of a gate acting on `qubits` inside an n-qubit
/// register: entry (i, j) is local(i', j') when i and j agree off the gate's
/// qubits, 0 otherwise. Equivalent to I (x) ... (x) G (x) ... (x) I up to the
/// qubit ordering.
inline DenseMatrix embed(const DenseMatrix& local, const std::vector<int>& qubits, int n) {
  const std::size_t dim = std::size_t{1} << n;
  std::uint64_t span = 0;
  for (int q : qubits) span |= std::uint64_t{1} << q;
  auto local_index = [&](std::uint64_t i) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < qubits.size(); ++k) out |= ((i >> qubits[k]) & 1U) << k;
    return out;
  };
  DenseMatrix full(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      if ((i & ~span) != (j & ~span)) continue;
      full(i, j) = local(local_index(i), local_index(j));
    }
  }
  return full;
}

inline std::vector<Complex> mat_vec(const DenseMatrix& m, const std::vector<Complex>& v) {
  std::vector<Complex> out(m.dim);
  for (std::size_t r = 0; r < m.dim; ++r) {
    for (std::size_t c = 0; c < m.dim; ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

inline std::vector<Complex> random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> v(std::size_t{1} << n);
  double norm = 0.0;
  for (auto& a : v) {
    a = {normal(rng), normal(rng)};
    norm += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(norm);
  return v;
}

/// Interpolation by direct expansion: sum over y with f(y) = 1
/// of prod_i (x_i + y_i + 1), multiplied out term by term.
inline boolean::BooleanPolynomial interpolate_by_expansion(const std::vector<std::uint8_t>& table, int m) {
  using boolean::BooleanPolynomial;
  BooleanPolynomial total;
  for (std::uint64_t y = 0; y < table.size(); ++y) {
    if (!table[y]) continue;
    BooleanPolynomial delta = BooleanPolynomial::constant(true);
    for (int i = 0; i < m; ++i) {
      const bool yi = (y >> i) & 1U;
      BooleanPolynomial factor = BooleanPolynomial::variable(i) + BooleanPolynomial::constant(!yi);
      delta = delta * factor;
    }
    total = total + delta;
  }
  return total;
}

/// Clause semantics spelled out: clause i fails iff all v_k = 0 on S_i and
/// all v_j = 1 on T_i.
inline bool satisfies_clauses(const boolean::SatInstance& u, boolean::Assignment v) {
  for (const auto& c : u.clauses) {
    bool violated = true;
    for (int k : c.s) violated = violated && !((v >> (k - 1)) & 1U);
    for (int j : c.t) violated = violated && ((v >> (j - 1)) & 1U);
    if (violated) return false;
  }
  return true;
}

/// Closest p/q to c/N over every q < bound (ties keep the smaller q), in
/// lowest terms, or nullopt unless |c/N - p/q| < 1/(2N).
inline std::optional<shor::Fraction> best_approximation_exhaustive(std::uint64_t c, std::uint64_t N,
                                                                  std::uint64_t bound) {
  std::optional<shor::Fraction> best;
  // Distances compared exactly as |c q - p N| / (N q).
  auto err = [&](std::uint64_t p, std::uint64_t q) {
    const long double diff = std::abs(static_cast<long double>(c) * q - static_cast<long double>(p) * N);
    return std::make_pair(diff, q);
  };
  auto less = [&](std::uint64_t p1, std::uint64_t q1, std::uint64_t p2, std::uint64_t q2) {
    const auto [d1, s1] = err(p1, q1);
    const auto [d2, s2] = err(p2, q2);
    return d1 * s2 < d2 * s1;
  };
  for (std::uint64_t q = 1; q < bound; ++q) {
    const std::uint64_t floor_p = c * q / N;
    for (std::uint64_t p : {floor_p, floor_p + 1}) {
      if (!best || less(p, q, best->numerator, best->denominator)) best = shor::Fraction{p, q};
    }
  }
  if (!best) return std::nullopt;
  const std::uint64_t g = std::gcd(best->numerator, best->denominator);
  best->numerator /= g;
  best->denominator /= g;
  const auto [d, q] = err(best->numerator, best->denominator);
  if (2 * d < q) return best;
  return std::nullopt;
}

}  // namespace qsim::oracle
