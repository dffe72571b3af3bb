#include "qsim/shor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qsim/errors.hpp"

namespace qsim::shor {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

int ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }

}  // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (std::uint64_t d = 3; d <= x / d; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

std::uint64_t integer_root(std::uint64_t x, int k) {
  if (k < 1) throw std::invalid_argument("root degree must be >= 1");
  if (k == 1 || x < 2) return x;
  auto pow_le = [&](std::uint64_t base) {  // base^k <= x without overflow
    u128 acc = 1;
    for (int i = 0; i < k; ++i) {
      acc *= base;
      if (acc > x) return false;
    }
    return true;
  };
  auto guess = static_cast<std::uint64_t>(std::pow(static_cast<double>(x), 1.0 / k));
  while (guess > 0 && !pow_le(guess)) --guess;
  while (pow_le(guess + 1)) ++guess;
  return guess;
}

bool is_prime_power(std::uint64_t x) {
  if (x < 2) return false;
  for (int k = 1; k <= static_cast<int>(std::bit_width(x)); ++k) {
    const std::uint64_t root = integer_root(x, k);
    u128 back = 1;
    for (int i = 0; i < k; ++i) back *= root;
    if (back == x && is_prime(root)) return true;
  }
  return false;
}

std::uint64_t euler_phi(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t result = x;
  for (std::uint64_t p = 2; p <= x / p; ++p) {
    if (x % p != 0) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

ShorParams choose_params(std::uint64_t M) {
  if (M < 3) throw std::invalid_argument(std::to_string(M) + " is too small to factor");
  if (M % 2 == 0) throw std::invalid_argument(std::to_string(M) + " is even");
  if (is_prime(M)) throw std::invalid_argument(std::to_string(M) + " is prime");
  if (is_prime_power(M)) throw std::invalid_argument(std::to_string(M) + " is a prime power");
  if (M >= (std::uint64_t{1} << 30)) throw std::invalid_argument(std::to_string(M) + " is too large");

  ShorParams p;
  p.M = M;
  // M^2 is odd, so it is never a power of two and n is unique.
  p.n = std::bit_width(M * M);
  p.N = std::uint64_t{1} << p.n;
  p.value_bits = ceil_log2(M);
  const double loglog = std::log2(std::log2(static_cast<double>(M)));
  p.max_runs_per_t = std::max(4, static_cast<int>(std::ceil(3.0 * loglog)));
  p.max_t_draws = ceil_log2(M);
  return p;
}

ShorParams with_base(ShorParams params, std::uint64_t t) {
  if (t <= 1 || t >= params.M) throw std::invalid_argument("base must satisfy 1 < t < M");
  if (std::gcd(t, params.M) != 1) throw std::invalid_argument("base must be coprime to M");
  params.t = t;
  return params;
}

std::uint64_t order_classical(std::uint64_t t, std::uint64_t M) {
  if (M < 2) throw std::invalid_argument("modulus must be >= 2");
  if (std::gcd(t, M) != 1) throw std::invalid_argument("order needs gcd(t, M) = 1");
  std::uint64_t value = t % M;
  std::uint64_t r = 1;
  while (value != 1) {
    value = mul_mod(value, t, M);
    ++r;
  }
  return r;
}

std::optional<std::uint64_t> classical_postprocess(std::uint64_t t, std::uint64_t r, std::uint64_t M) {
  if (r < 1) throw std::invalid_argument("period candidate must be >= 1");
  if (r % 2 != 0) return std::nullopt;
  const std::uint64_t half = mod_pow(t, r / 2, M);
  for (std::uint64_t candidate : {(half + 1) % M, (half + M - 1) % M}) {
    const std::uint64_t g = std::gcd(candidate, M);
    if (g > 1 && g < M) return g;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> modexp_permutation(const ShorParams& params) {
  if (params.t == 0) throw std::invalid_argument("base t not chosen");
  const int total = params.total_qubits();
  if (total > 40) throw CapacityError("modexp table too large");
  const std::uint64_t size = std::uint64_t{1} << total;
  const std::uint64_t a_mask = params.N - 1;
  std::vector<std::uint64_t> powers(params.N);
  std::uint64_t value = 1 % params.M;
  for (std::uint64_t a = 0; a < params.N; ++a) {
    powers[a] = value;
    value = mul_mod(value, params.t, params.M);
  }
  std::vector<std::uint64_t> table(size);
  for (std::uint64_t index = 0; index < size; ++index) {
    const std::uint64_t a = index & a_mask;
    const std::uint64_t y = index >> params.n;
    table[index] = a | ((y ^ powers[a]) << params.n);
  }
  return table;
}

std::optional<Fraction> best_approximation(std::uint64_t c, std::uint64_t N, std::uint64_t bound) {
  if (N == 0 || c >= N) throw std::invalid_argument("need 0 <= c < N");
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  if (bound == 1) return std::nullopt;  // no denominator below 1

  // |c/N - p/q| scaled by N: |c q - p N| / q, compared by cross-multiplying.
  auto error_num = [&](std::uint64_t p, std::uint64_t q) -> u128 {
    const u128 lhs = static_cast<u128>(c) * q;
    const u128 rhs = static_cast<u128>(p) * N;
    return lhs > rhs ? lhs - rhs : rhs - lhs;
  };
  auto closer = [&](const Fraction& a, const Fraction& b) {  // a strictly closer than b
    return error_num(a.numerator, a.denominator) * b.denominator <
           error_num(b.numerator, b.denominator) * a.denominator;
  };

  // Convergents p_k/q_k with p_{-2}/q_{-2} = 0/1, p_{-1}/q_{-1} = 1/0.
  std::uint64_t p_prev = 0, q_prev = 1;
  std::uint64_t p_last = 1, q_last = 0;
  std::uint64_t num = c, den = N;
  Fraction best{0, 1};
  while (den != 0) {
    const std::uint64_t a = num / den;
    const std::uint64_t rem = num - a * den;
    num = den;
    den = rem;
    const u128 q = static_cast<u128>(a) * q_last + q_prev;
    if (q >= bound) {
      // Largest semiconvergent (p_prev + j p_last)/(q_prev + j q_last) below the bound.
      const std::uint64_t j = (bound - 1 - q_prev) / q_last;
      if (j >= 1) {
        const Fraction semi{p_prev + j * p_last, q_prev + j * q_last};
        if (closer(semi, best)) best = semi;
      }
      break;
    }
    const std::uint64_t p = a * p_last + p_prev;
    p_prev = p_last;
    q_prev = q_last;
    p_last = p;
    q_last = static_cast<std::uint64_t>(q);
    best = {p_last, q_last};
  }
  if (2 * error_num(best.numerator, best.denominator) < best.denominator) return best;
  return std::nullopt;
}

ShorOutcome decode_outcome(const ShorParams& params, std::uint64_t c, std::uint64_t residue) {
  ShorOutcome out;
  out.t = params.t;
  out.c = c;
  out.residue = residue;
  out.decoded = best_approximation(c, params.N, params.M);
  if (out.decoded && out.decoded->denominator >= 1) {
    out.factor = classical_postprocess(params.t, out.decoded->denominator, params.M);
  }
  return out;
}

PeriodFinder::PeriodFinder(ShorParams params, const SimConfig& config)
    : params_(params),
      config_(config),
      modexp_(U1Gate{0}),
      transform_(qft::qft_circuit_bitrev(params.n)) {
  if (params_.t == 0) throw std::invalid_argument("base t not chosen");
  if (params_.total_qubits() > config_.max_qubits) {
    throw CapacityError("period finding for M = " + std::to_string(params_.M) + " needs " +
                        std::to_string(params_.total_qubits()) + " qubits; cap is " +
                        std::to_string(config_.max_qubits));
  }
  modexp_ = permutation_gate(modexp_permutation(params_), params_.total_qubits());
}

StateVector PeriodFinder::prepare() const {
  StateVector state(params_.total_qubits(), config_);
  for (int q = 0; q < params_.n; ++q) state.apply(u1(q));  // (i)
  state.apply(modexp_);                                      // (ii)
  state.apply(transform_.gates);                             // (iii)
  return state;
}

ShorOutcome PeriodFinder::run(std::mt19937_64& rng) const {
  StateVector state = prepare();
  const MeasurementOutcome seen = measure(state, rng);  // (iv)
  const std::uint64_t c = qft::bit_reverse(seen.basis_index & (params_.N - 1), params_.n);
  return decode_outcome(params_, c, seen.basis_index >> params_.n);
}

ShorOutcome quantum_period_run(const ShorParams& params, std::mt19937_64& rng, const SimConfig& config) {
  return PeriodFinder(params, config).run(rng);
}

std::map<std::pair<std::uint64_t, std::uint64_t>, double> peak_distribution(const ShorParams& params) {
  if (params.t == 0) throw std::invalid_argument("base t not chosen");
  const std::uint64_t N = params.N;
  if (N > (std::uint64_t{1} << 14)) throw CapacityError("exact distribution limited to N <= 2^14");

  // Group a by the value t^a mod M.
  std::map<std::uint64_t, std::vector<std::uint64_t>> classes;
  std::uint64_t value = 1 % params.M;
  for (std::uint64_t a = 0; a < N; ++a) {
    classes[value].push_back(a);
    value = mul_mod(value, params.t, params.M);
  }
  std::vector<Complex> roots(N);
  for (std::uint64_t k = 0; k < N; ++k) {
    roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(N));
  }

  std::map<std::pair<std::uint64_t, std::uint64_t>, double> dist;
  const double inv_n = 1.0 / static_cast<double>(N);
  for (const auto& [residue, members] : classes) {
    for (std::uint64_t c = 0; c < N; ++c) {
      Complex sum{};
      for (std::uint64_t a : members) sum += roots[(a * c) & (N - 1)];
      dist[{c, residue}] = std::norm(sum * inv_n);
    }
  }
  return dist;
}

std::map<std::pair<std::uint64_t, std::uint64_t>, double> simulated_distribution(const PeriodFinder& finder) {
  const ShorParams& p = finder.params();
  const StateVector state = finder.prepare();
  const auto amps = state.amplitudes();
  std::map<std::pair<std::uint64_t, std::uint64_t>, double> dist;
  for (std::uint64_t index = 0; index < amps.size(); ++index) {
    const std::uint64_t residue = index >> p.n;
    if (residue >= p.M) continue;
    const std::uint64_t c = qft::bit_reverse(index & (p.N - 1), p.n);
    dist[{c, residue}] = std::norm(amps[index]);
  }
  return dist;
}

bool is_good(std::uint64_t c, std::uint64_t r, std::uint64_t N) {
  const std::uint64_t l = static_cast<std::uint64_t>(static_cast<u128>(r) * c % N);
  // |l| <= r/2 with l taken in (-N/2, N/2]; compare 2|l| <= r to stay integral.
  const std::uint64_t dist = std::min(l, N - l);
  return 2 * dist <= r;
}

FactorReport factor(std::uint64_t M, const FactorConfig& config, std::uint64_t seed) {
  const ShorParams base = choose_params(M);
  FactorReport report;
  report.M = M;
  report.seed = seed;
  report.max_runs_per_t = config.max_runs_per_t > 0 ? config.max_runs_per_t : base.max_runs_per_t;
  report.max_t_draws = config.t ? 1 : (config.max_t_draws > 0 ? config.max_t_draws : base.max_t_draws);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick_t(2, M - 1);

  for (int draw = 0; draw < report.max_t_draws; ++draw) {
    std::uint64_t t = 0;
    if (config.t) {
      t = *config.t;
    } else {
      do {
        t = pick_t(rng);
      } while (std::gcd(t, M) != 1);
    }
    const ShorParams params = with_base(base, t);
    ++report.t_draws;

    std::optional<PeriodFinder> finder;
    std::optional<std::uint64_t> true_order;
    if (config.source == PeriodSource::kQuantum) {
      finder.emplace(params, config.sim);
    } else {
      true_order = order_classical(t, M);
    }

    for (int run = 0; run < report.max_runs_per_t; ++run) {
      ShorOutcome outcome;
      if (finder) {
        outcome = finder->run(rng);
      } else {
        outcome.t = t;
        outcome.residue = 1;
        outcome.decoded = Fraction{1, *true_order};
        outcome.factor = classical_postprocess(t, *true_order, M);
      }
      if (!outcome.factor && config.try_multiples && outcome.decoded) {
        const std::uint64_t r = outcome.decoded->denominator;
        for (std::uint64_t lambda = 2; lambda <= 4 && lambda * r <= M; ++lambda) {
          if (auto f = classical_postprocess(t, lambda * r, M)) {
            outcome.factor = f;
            outcome.r_used = lambda * r;
            break;
          }
        }
      }
      report.runs.push_back(outcome);
      if (outcome.factor) {
        report.factor = outcome.factor;
        report.cofactor = M / *outcome.factor;
        return report;
      }
    }
  }
  return report;
}

}  // namespace qsim::shor
