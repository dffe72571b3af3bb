#pragma once

// Shor factoring: parameter choice, the classical reduction from a period
// to a divisor, one simulated quantum period-finding run, the exact outcome
// distribution, continued-fraction decoding and the retry loop.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qsim/gates.hpp"
#include "qsim/qft.hpp"
#include "qsim/state_vector.hpp"

namespace qsim::shor {

// --- number theory --------------------------------------------------------

/// base^exp mod m by repeated squaring.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Deterministic trial division.
bool is_prime(std::uint64_t x);
/// floor(x^(1/k)), exact.
std::uint64_t integer_root(std::uint64_t x, int k);
/// x = p^e for a prime p and e >= 1.
bool is_prime_power(std::uint64_t x);
/// Euler's totient by trial factorization.
std::uint64_t euler_phi(std::uint64_t x);

// --- parameters -----------------------------------------------------------

struct ShorParams {
  std::uint64_t M = 0;
  int n = 0;             // a-register bits
  std::uint64_t N = 0;   // 2^n, M^2 < N < 2 M^2
  std::uint64_t t = 0;   // base, 1 < t < M, gcd(t, M) = 1 (0 until chosen)
  int value_bits = 0;    // width of the t^a mod M register
  int max_runs_per_t = 0;
  int max_t_draws = 0;

  int total_qubits() const { return n + value_bits; }
};

/// Throws invalid_argument (with the reason) unless M is odd, composite and
/// not a prime power. Budgets get their defaults:
///   max_runs_per_t = max(4, ceil(3 log2 log2 M)), max_t_draws = ceil(log2 M).
ShorParams choose_params(std::uint64_t M);

/// choose_params(M) with t set; throws invalid_argument unless 1 < t < M and
/// gcd(t, M) = 1.
ShorParams with_base(ShorParams params, std::uint64_t t);

/// Least r >= 1 with t^r = 1 mod M, by stepping through powers.
std::uint64_t order_classical(std::uint64_t t, std::uint64_t M);

/// For even r: the first proper divisor among gcd(t^(r/2) + 1, M) and
/// gcd(t^(r/2) - 1, M). Odd r, or neither gcd proper, gives nullopt.
std::optional<std::uint64_t> classical_postprocess(std::uint64_t t, std::uint64_t r, std::uint64_t M);

// --- quantum part ---------------------------------------------------------

/// Table of (a, y) -> (a, y XOR (t^a mod M)), index a + y * 2^n, over
/// n + value_bits qubits.
std::vector<std::uint64_t> modexp_permutation(const ShorParams& params);

struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  bool operator==(const Fraction&) const = default;
};

/// Best rational approximation d'/r' of c/N with r' < bound, in lowest
/// terms, found from the continued-fraction expansion (last convergent
/// below the bound, or the semiconvergent after it when that is closer).
/// Returns nullopt if it misses |c/N - d'/r'| < 1/(2N).
std::optional<Fraction> best_approximation(std::uint64_t c, std::uint64_t N, std::uint64_t bound);

struct ShorOutcome {
  std::uint64_t t = 0;
  std::uint64_t c = 0;        // decoded frequency in [0, N)
  std::uint64_t residue = 0;  // observed t^k mod M
  std::optional<Fraction> decoded;
  std::optional<std::uint64_t> factor;
  /// r' tried when decoding alone failed (only with the multiples option).
  std::optional<std::uint64_t> r_used;

  std::optional<std::uint64_t> r_prime() const {
    return decoded ? std::optional<std::uint64_t>(decoded->denominator) : std::nullopt;
  }
};

/// Fills decoded and factor from (c, residue): best_approximation with bound
/// M, then classical_postprocess on the denominator.
ShorOutcome decode_outcome(const ShorParams& params, std::uint64_t c, std::uint64_t residue);

/// The four steps on a fresh state: U1 on the a-register, the modexp
/// permutation, the bit-reversed Fourier transform of the a-register.
/// Building the permutation is the expensive part, so repeated runs with
/// one t share an instance.
class PeriodFinder {
 public:
  explicit PeriodFinder(ShorParams params, const SimConfig& config = {});

  const ShorParams& params() const { return params_; }

  /// State right before observation.
  StateVector prepare() const;

  /// One run: prepare, observe both registers, undo the bit reversal of c
  /// and decode.
  ShorOutcome run(std::mt19937_64& rng) const;

 private:
  ShorParams params_;
  SimConfig config_;
  Gate modexp_;
  qft::QftCircuit transform_;
};

/// PeriodFinder(params, config).run(rng). Throws CapacityError when
/// params.total_qubits() exceeds config.max_qubits.
ShorOutcome quantum_period_run(const ShorParams& params, std::mt19937_64& rng, const SimConfig& config = {});

/// Exact observation probabilities from the exponential sum
///   | (1/N) sum_{a : t^a = residue} exp(2 pi i a c / N) |^2
/// keyed by (c, residue), for every c < N and every residue t^k mod M.
std::map<std::pair<std::uint64_t, std::uint64_t>, double> peak_distribution(const ShorParams& params);

/// Probabilities of the prepared state, keyed like peak_distribution with c
/// already un-reversed.
std::map<std::pair<std::uint64_t, std::uint64_t>, double> simulated_distribution(const PeriodFinder& finder);

/// c is good when r c = l (mod N) for some |l| <= r/2.
bool is_good(std::uint64_t c, std::uint64_t r, std::uint64_t N);

// --- retry loop -----------------------------------------------------------

enum class PeriodSource { kQuantum, kClassical };

struct FactorConfig {
  /// Fixed base: replaces the random draw and allows a single draw.
  std::optional<std::uint64_t> t;
  /// 0 keeps the default from choose_params.
  int max_runs_per_t = 0;
  int max_t_draws = 0;
  /// After a failed decode, also try lambda * r' <= M for lambda = 2..4.
  bool try_multiples = false;
  /// kClassical substitutes order_classical for the quantum run.
  PeriodSource source = PeriodSource::kQuantum;
  SimConfig sim;
};

struct FactorReport {
  std::uint64_t M = 0;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> factor;
  std::optional<std::uint64_t> cofactor;
  std::vector<ShorOutcome> runs;
  int t_draws = 0;
  int max_runs_per_t = 0;
  int max_t_draws = 0;
};

/// Runs, decodes and post-processes until a proper divisor turns up or the
/// budgets run out (reported with no factor, not thrown). Deterministic in
/// `seed`. Throws invalid_argument when M fails choose_params.
FactorReport factor(std::uint64_t M, const FactorConfig& config, std::uint64_t seed);

}  // namespace qsim::shor
