#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ppc/arith.hpp"
#include "ppc/errors.hpp"

namespace ppc {
namespace {

TEST(SievePrimes, SmallTables) {
  const auto t10 = sieve_primes(10);
  EXPECT_EQ(std::vector<std::uint64_t>(t10.primes().begin(), t10.primes().end()),
            (std::vector<std::uint64_t>{2, 3, 5, 7}));
  const auto t2 = sieve_primes(2);
  ASSERT_EQ(t2.size(), 1u);
  EXPECT_EQ(t2.primes()[0], 2u);
  EXPECT_EQ(sieve_primes(100).size(), 25u);
}

TEST(SievePrimes, MatchesTrialDivisionTo1e5) {
  SieveConfig cfg;
  cfg.segment_length = 4096;  // force many segments
  const auto table = sieve_primes(100'000, cfg);
  std::vector<std::uint64_t> expected;
  for (std::uint64_t n = 2; n <= 100'000; ++n) {
    if (oracle::trial_is_prime(n)) expected.push_back(n);
  }
  EXPECT_EQ(std::vector<std::uint64_t>(table.primes().begin(), table.primes().end()), expected);
  for (std::size_t i = 0; i < table.size(); i += 997) {
    EXPECT_DOUBLE_EQ(table.logs()[i], std::log(static_cast<double>(table.primes()[i])));
  }
}

TEST(SievePrimes, Errors) {
  EXPECT_THROW(sieve_primes(1), DomainError);
  EXPECT_THROW(sieve_primes(0), DomainError);
  SieveConfig tight;
  tight.memory_budget_bytes = 1 << 16;
  EXPECT_THROW(sieve_primes(10'000'000, tight), CapacityError);
}

TEST(PrimeCountInterval, Examples) {
  const auto base = sieve_primes(1100);
  EXPECT_EQ(prime_count_interval(1, 100, base), 25u);
  EXPECT_EQ(prime_count_interval(500, 500, base), 0u);

  std::uint64_t direct = 0;
  for (std::uint64_t n = 1'000'001; n <= 1'001'000; ++n) direct += oracle::trial_is_prime(n) ? 1 : 0;
  EXPECT_EQ(prime_count_interval(1'000'000, 1'001'000, base), direct);
  EXPECT_EQ(direct, 75u);
}

TEST(PrimeCountInterval, InsufficientBaseIsPreconditionError) {
  const auto base = sieve_primes(100);
  EXPECT_THROW(prime_count_interval(0, 20'000, base), PreconditionError);
  EXPECT_THROW(prime_count_interval(10, 5, base), PreconditionError);
}

TEST(PrimeCountInterval, AdditiveOverAdjacentIntervals) {
  std::mt19937_64 rng(7);
  SieveConfig cfg;
  cfg.segment_length = 1000;
  const auto base = sieve_primes(4000);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::uint64_t> dist(0, 16'000'000);
    std::uint64_t a = dist(rng), b = dist(rng), c = dist(rng);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    EXPECT_EQ(prime_count_interval(a, b, base, cfg) + prime_count_interval(b, c, base, cfg),
              prime_count_interval(a, c, base, cfg));
  }
}

TEST(PrimeCountInterval, ThreadCountDoesNotChangeResult) {
  const auto base = sieve_primes(10'000);
  SieveConfig one;
  one.segment_length = 1 << 16;
  SieveConfig four = one;
  four.threads = 4;
  EXPECT_EQ(prime_count_interval(0, 20'000'000, base, one), prime_count_interval(0, 20'000'000, base, four));
  EXPECT_EQ(prime_count_interval(0, 10'000'000, base, one), 664'579u);
}

TEST(LambdaSegment, Definitions) {
  const auto base = sieve_primes(100);
  const auto seg = lambda_segment(1, 10, base);
  std::vector<std::uint64_t> ns;
  for (const auto& e : seg.entries) ns.push_back(e.n);
  EXPECT_EQ(ns, (std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9}));
  EXPECT_DOUBLE_EQ(seg.lambda(8), std::log(2.0));
  EXPECT_EQ(seg.lambda(6), 0.0);

  const auto seg12 = lambda_segment(0, 20, base);
  EXPECT_EQ(seg12.lambda(12), 0.0);
  const auto eight = std::find_if(seg12.entries.begin(), seg12.entries.end(), [](auto& e) { return e.n == 8; });
  ASSERT_NE(eight, seg12.entries.end());
  EXPECT_EQ(eight->p, 2u);
  EXPECT_EQ(eight->r, 3u);
}

TEST(LambdaSegment, CompleteAgainstFactorization) {
  SieveConfig cfg;
  cfg.segment_length = 10'000;
  const auto base = sieve_primes(1001);
  const auto seg = lambda_segment(900'000, 1'000'000, base, cfg);
  std::size_t idx = 0;
  for (std::uint64_t n = 900'001; n <= 1'000'000; ++n) {
    const double expected = oracle::lambda(n);
    if (expected == 0.0) continue;
    ASSERT_LT(idx, seg.entries.size());
    const auto& e = seg.entries[idx++];
    ASSERT_EQ(e.n, n);
    EXPECT_DOUBLE_EQ(e.log_p, expected);
    EXPECT_EQ(*checked_pow(e.p, e.r), n);
  }
  EXPECT_EQ(idx, seg.entries.size());
}

TEST(Psi, KnownValues) {
  const auto base = sieve_primes(100);
  EXPECT_EQ(psi(1, base), 0.0);
  EXPECT_NEAR(psi(10, base), 7.832014180505, 1e-9);
  EXPECT_NEAR(psi(10, base), 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0), 1e-12);
  double via_segment = 0.0;
  for (const auto& e : lambda_segment(0, 100, base).entries) via_segment += e.log_p;
  EXPECT_NEAR(psi(100, base), via_segment, 1e-11);
  EXPECT_NEAR(psi(100, base), 94.045311229357, 1e-9);
}

TEST(Psi, StepsAreLambda) {
  const auto base = sieve_primes(100);
  std::vector<std::uint64_t> xs(2000);
  for (std::uint64_t i = 0; i < xs.size(); ++i) xs[i] = i + 1;
  const auto values = psi_many(xs, base);
  for (std::size_t i = 1; i < values.size(); ++i) {
    EXPECT_GE(values[i], values[i - 1]);
    EXPECT_NEAR(values[i] - values[i - 1], oracle::lambda(xs[i]), 1e-9) << xs[i];
  }
}

TEST(Psi, ThetaIntervalMatchesNaive) {
  const auto base = sieve_primes(2000);
  double naive = 0.0;
  for (std::uint64_t n = 3'000'001; n <= 3'010'000; ++n) {
    if (oracle::trial_is_prime(n)) naive += std::log(static_cast<double>(n));
  }
  EXPECT_NEAR(theta_interval(3'000'000, 3'010'000, base), naive, 1e-8);
}

TEST(IsPrimePower, Examples) {
  EXPECT_EQ(is_prime_power(9), (PrimePowerRoot{3, 2}));
  EXPECT_EQ(is_prime_power(1024), (PrimePowerRoot{2, 10}));
  EXPECT_FALSE(is_prime_power(1).has_value());
  EXPECT_FALSE(is_prime_power(12).has_value());
  EXPECT_EQ(is_prime_power(7), (PrimePowerRoot{7, 1}));
  EXPECT_EQ(is_prime_power(9'223'372'036'854'775'808ULL), (PrimePowerRoot{2, 63}));
  EXPECT_EQ(is_prime_power(999'999'999'989ULL * 1), (PrimePowerRoot{999'999'999'989ULL, 1}));
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    EXPECT_EQ(is_prime_power(n).has_value(), oracle::lambda(n) != 0.0) << n;
  }
}

TEST(IsPrime, MatchesTrialDivisionAndKnownLargeCases) {
  for (std::uint64_t n = 0; n < 20'000; ++n) ASSERT_EQ(is_prime(n), oracle::trial_is_prime(n)) << n;
  EXPECT_TRUE(is_prime(18'446'744'073'709'551'557ULL));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(3'215'031'751ULL));               // strong pseudoprime to bases 2,3,5,7
  EXPECT_FALSE(is_prime(1'000'000'007ULL * 998'244'353ULL));
}

TEST(IntegerRoots, Exact) {
  EXPECT_EQ(isqrt(UINT64_MAX), 4'294'967'295ULL);
  EXPECT_EQ(isqrt(99), 9u);
  EXPECT_EQ(iroot(1'000'000'000'000ULL, 3), 10'000u);
  EXPECT_EQ(iroot(999'999'999'999ULL, 3), 9'999u);
  EXPECT_EQ(iroot(UINT64_MAX, 2), 4'294'967'295ULL);
  EXPECT_EQ(iroot(UINT64_MAX, 63), 2u);
  EXPECT_FALSE(checked_pow(2, 64).has_value());
}

TEST(KfreeDecompose, Examples) {
  const auto d72 = kfree_decompose(72, 2);
  EXPECT_EQ(d72.q, 2u);
  EXPECT_EQ(d72.m, 6u);
  const auto d8 = kfree_decompose(8, 3);
  EXPECT_EQ(d8.q, 1u);
  EXPECT_EQ(d8.m, 2u);
  for (unsigned k = 2; k <= 6; ++k) {
    const auto dp = kfree_decompose(104'729, k);
    EXPECT_EQ(dp.q, 104'729u);
    EXPECT_EQ(dp.m, 1u);
  }
  EXPECT_THROW(kfree_decompose(0, 2), DomainError);
  EXPECT_THROW(kfree_decompose(10, 1), DomainError);
}

TEST(KfreeDecompose, LargeCofactors) {
  // p^2 and p*q with both primes beyond the trial bound.
  const std::uint64_t p = 1'000'003, q = 999'983;
  auto sq = kfree_decompose(p * p * 12, 2);
  EXPECT_EQ(sq.q, 3u);
  EXPECT_EQ(sq.m, 2 * p);
  auto sq3 = kfree_decompose(p * p, 3);
  EXPECT_EQ(sq3.q, p * p);
  EXPECT_EQ(sq3.m, 1u);
  auto pq = kfree_decompose(p * q * 8, 3);
  EXPECT_EQ(pq.q, p * q);
  EXPECT_EQ(pq.m, 2u);
}

TEST(KfreeDecompose, ReconstructsAndIsKfreeTo1e5) {
  for (unsigned k = 2; k <= 5; ++k) {
    for (std::uint64_t n = 1; n <= 100'000; ++n) {
      const auto d = kfree_decompose(n, k);
      ASSERT_EQ(d.q * oracle::ipow(d.m, static_cast<int>(k)), n);
      for (std::uint64_t f = 2; oracle::ipow(f, static_cast<int>(k)) <= d.q; ++f) {
        ASSERT_NE(d.q % oracle::ipow(f, static_cast<int>(k)), 0u) << n << " k=" << k;
      }
    }
  }
}

TEST(KfreeDecompose, PrimePartCharacterizesProductsOfPrimeAndPower) {
  constexpr std::uint64_t kLimit = 100'000;
  for (int k = 2; k <= 5; ++k) {
    const auto set = oracle::pm_set(kLimit, k);
    for (std::uint64_t n = 1; n <= kLimit; ++n) {
      const bool prime_part = is_prime(kfree_decompose(n, static_cast<unsigned>(k)).q);
      ASSERT_EQ(prime_part, set.count(n) == 1) << n << " k=" << k;
    }
  }
}

}  // namespace
}  // namespace ppc
