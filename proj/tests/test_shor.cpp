#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qsim/errors.hpp"
#include "qsim/shor.hpp"

namespace qsim::shor {
namespace {

TEST(NumberTheory, Basics) {
  EXPECT_EQ(mod_pow(2, 10, 1000), 24U);
  EXPECT_EQ(mod_pow(7, 0, 13), 1U);
  EXPECT_EQ(mod_pow(3, 5, 1), 0U);
  EXPECT_EQ(mod_pow(0xFFFFFFFFULL, 3, 0xFFFFFFFBULL), mod_pow(4, 3, 0xFFFFFFFBULL));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_FALSE(is_prime(1));
  EXPECT_EQ(integer_root(26, 3), 2U);
  EXPECT_EQ(integer_root(27, 3), 3U);
  EXPECT_TRUE(is_prime_power(9));
  EXPECT_TRUE(is_prime_power(343));
  EXPECT_FALSE(is_prime_power(15));
  EXPECT_EQ(euler_phi(12), 4U);
  EXPECT_EQ(euler_phi(7), 6U);
}

TEST(Params, ChooseParams) {
  const ShorParams p15 = choose_params(15);
  EXPECT_EQ(p15.n, 8);
  EXPECT_EQ(p15.N, 256U);
  EXPECT_EQ(p15.value_bits, 4);
  EXPECT_EQ(p15.total_qubits(), 12);
  EXPECT_EQ(p15.max_runs_per_t, 6);  // ceil(3 log2 log2 15) = ceil(5.9)
  EXPECT_EQ(p15.max_t_draws, 4);
  EXPECT_EQ(choose_params(21).n, 9);
  EXPECT_EQ(choose_params(35).total_qubits(), 17);
  for (std::uint64_t M : {15ULL, 21ULL, 33ULL, 35ULL, 91ULL}) {
    const ShorParams p = choose_params(M);
    EXPECT_LT(M * M, p.N);
    EXPECT_LT(p.N, 2 * M * M);
  }
}

TEST(Params, Rejections) {
  for (std::uint64_t M : {0ULL, 1ULL, 2ULL, 3ULL, 9ULL, 14ULL, 13ULL, 27ULL}) {
    EXPECT_THROW(choose_params(M), std::invalid_argument) << M;
  }
  EXPECT_THROW(with_base(choose_params(15), 5), std::invalid_argument);
  EXPECT_THROW(with_base(choose_params(15), 1), std::invalid_argument);
  EXPECT_THROW(with_base(choose_params(15), 15), std::invalid_argument);
  EXPECT_EQ(with_base(choose_params(15), 2).t, 2U);
}

TEST(Classical, OrdersAndPostprocess) {
  EXPECT_EQ(order_classical(2, 15), 4U);
  EXPECT_EQ(order_classical(2, 21), 6U);
  EXPECT_EQ(order_classical(2, 33), 10U);
  EXPECT_EQ(order_classical(2, 35), 12U);
  EXPECT_EQ(classical_postprocess(2, 4, 15), std::optional<std::uint64_t>(5));
  EXPECT_EQ(classical_postprocess(2, 2, 15), std::optional<std::uint64_t>(3));
  EXPECT_EQ(classical_postprocess(2, 3, 15), std::nullopt);
  // 14^1 = -1 mod 15: both gcds trivial.
  EXPECT_EQ(classical_postprocess(14, 2, 15), std::nullopt);
}

TEST(Modexp, TableExamplesAndBijection) {
  const ShorParams p = with_base(choose_params(15), 2);
  const auto table = modexp_permutation(p);
  ASSERT_EQ(table.size(), std::size_t{1} << 12);
  EXPECT_EQ(table[0], 0U + (1U << 8));
  EXPECT_EQ(table[3], 3U + (8U << 8));
  EXPECT_EQ(table[3 + (8U << 8)], 3U);
  std::vector<bool> seen(table.size(), false);
  for (auto v : table) {
    ASSERT_LT(v, table.size());
    ASSERT_FALSE(seen[v]);
    seen[v] = true;
  }
}

TEST(BestApproximation, Examples) {
  EXPECT_EQ(best_approximation(64, 256, 15), (Fraction{1, 4}));
  EXPECT_EQ(best_approximation(0, 256, 15), (Fraction{0, 1}));
  EXPECT_EQ(best_approximation(85, 256, 15), (Fraction{1, 3}));
  EXPECT_EQ(best_approximation(128, 256, 15), (Fraction{1, 2}));
}

TEST(BestApproximation, MatchesExhaustiveSearchOnSample) {
  for (std::uint64_t N : {16ULL, 128ULL, 1000ULL, 4096ULL}) {
    for (std::uint64_t bound : {2ULL, 7ULL, 33ULL, 64ULL}) {
      for (std::uint64_t c = 0; c < N; c += 1 + N / 257) {
        ASSERT_EQ(best_approximation(c, N, bound), oracle::best_approximation_exhaustive(c, N, bound))
            << c << "/" << N << " bound " << bound;
      }
    }
  }
}

TEST(QuantumRun, FifteenBaseTwoOutcomes) {
  const ShorParams p = with_base(choose_params(15), 2);
  const PeriodFinder finder(p);
  std::mt19937_64 rng(51);
  std::set<std::uint64_t> cs;
  for (int i = 0; i < 64; ++i) {
    const ShorOutcome o = finder.run(rng);
    cs.insert(o.c);
    EXPECT_TRUE(o.residue == 1 || o.residue == 2 || o.residue == 4 || o.residue == 8);
  }
  EXPECT_EQ(cs, (std::set<std::uint64_t>{0, 64, 128, 192}));
}

TEST(QuantumRun, CapacityError) {
  SimConfig small;
  small.max_qubits = 11;
  std::mt19937_64 rng(52);
  EXPECT_THROW(quantum_period_run(with_base(choose_params(15), 2), rng, small), CapacityError);
}

TEST(Distribution, FifteenIsUniformOverSixteenOutcomes) {
  const ShorParams p = with_base(choose_params(15), 2);
  const auto exact = peak_distribution(p);
  int support = 0;
  double total = 0.0;
  for (const auto& [key, prob] : exact) {
    total += prob;
    if (prob > 1e-12) {
      ++support;
      EXPECT_NEAR(prob, 1.0 / 16.0, 1e-10);
    }
  }
  EXPECT_EQ(support, 16);
  EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(Distribution, SimulationMatchesExponentialSum) {
  for (auto [M, t] : {std::pair{15ULL, 7ULL}, std::pair{21ULL, 2ULL}, std::pair{21ULL, 5ULL}}) {
    const ShorParams p = with_base(choose_params(M), t);
    const auto exact = peak_distribution(p);
    const auto simulated = simulated_distribution(PeriodFinder(p));
    for (const auto& [key, prob] : simulated) {
      const auto it = exact.find(key);
      ASSERT_NEAR(prob, it == exact.end() ? 0.0 : it->second, 1e-10);
    }
    for (const auto& [key, prob] : exact) {
      const auto it = simulated.find(key);
      ASSERT_NEAR(prob, it == simulated.end() ? 0.0 : it->second, 1e-10);
    }
  }
}

TEST(GoodC, DecodesToADivisorOfTheOrder) {
  for (std::uint64_t M : {15ULL, 21ULL}) {
    const ShorParams base = choose_params(M);
    for (std::uint64_t t = 2; t < M; ++t) {
      if (std::gcd(t, M) != 1) continue;
      const ShorParams p = with_base(base, t);
      const std::uint64_t r = order_classical(t, M);
      for (std::uint64_t c = 0; c < p.N; ++c) {
        if (!is_good(c, r, p.N)) continue;
        const auto f = best_approximation(c, p.N, M);
        ASSERT_TRUE(f.has_value()) << "M=" << M << " t=" << t << " c=" << c;
        ASSERT_EQ(r % f->denominator, 0U);
      }
    }
  }
}

TEST(GoodC, IsGoodExamples) {
  EXPECT_TRUE(is_good(64, 4, 256));
  EXPECT_TRUE(is_good(0, 4, 256));
  EXPECT_FALSE(is_good(32, 4, 256));
  EXPECT_TRUE(is_good(43, 6, 256));   // 258 = 2 mod 256
  EXPECT_FALSE(is_good(20, 6, 256));  // 120
}

TEST(Factor, SmallSemiprimes) {
  for (std::uint64_t M : {15ULL, 21ULL, 35ULL}) {
    const FactorReport report = factor(M, FactorConfig{}, 7);
    ASSERT_TRUE(report.factor.has_value()) << M;
    EXPECT_EQ(*report.factor * *report.cofactor, M);
    EXPECT_GT(*report.factor, 1U);
    EXPECT_LT(*report.factor, M);
  }
}

TEST(Factor, DeterministicInSeed) {
  const FactorReport a = factor(21, FactorConfig{}, 99);
  const FactorReport b = factor(21, FactorConfig{}, 99);
  ASSERT_EQ(a.runs.size(), b.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    EXPECT_EQ(a.runs[i].t, b.runs[i].t);
    EXPECT_EQ(a.runs[i].c, b.runs[i].c);
  }
}

TEST(Factor, ClassicalSourceAgreesOnFactorability) {
  for (std::uint64_t M : {15ULL, 21ULL, 33ULL, 35ULL}) {
    FactorConfig config;
    config.source = PeriodSource::kClassical;
    const FactorReport report = factor(M, config, 3);
    ASSERT_TRUE(report.factor.has_value()) << M;
    EXPECT_EQ(M % *report.factor, 0U);
  }
}

TEST(Factor, FixedBaseIsASingleDraw) {
  FactorConfig config;
  config.t = 14;
  const FactorReport report = factor(15, config, 1);
  EXPECT_FALSE(report.factor.has_value());
  EXPECT_EQ(report.t_draws, 1);
  EXPECT_EQ(static_cast<int>(report.runs.size()), report.max_runs_per_t);
}

TEST(Factor, RejectsBadModulus) {
  EXPECT_THROW(factor(9, FactorConfig{}, 1), std::invalid_argument);
  EXPECT_THROW(factor(17, FactorConfig{}, 1), std::invalid_argument);
}

}  // namespace
}  // namespace qsim::shor
