#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "ppc/errors.hpp"
#include "ppc/explicit_formula.hpp"

namespace ppc {
namespace {

const ZeroTable& full_table() {
  static const ZeroTable table = load_zeros(PPC_TEST_ZEROS_PATH);
  return table;
}

const PrimeTable& base() {
  static const PrimeTable table = sieve_primes(2000);
  return table;
}

TEST(TrapezoidWeight, Shape) {
  const TrapezoidWeight w(1000, 100, 10);
  EXPECT_EQ(w(1000), 1.0);
  EXPECT_EQ(w(1050), 1.0);
  EXPECT_EQ(w(1100), 1.0);
  EXPECT_EQ(w(990), 0.0);
  EXPECT_EQ(w(1110), 0.0);
  EXPECT_DOUBLE_EQ(w(1105), 0.5);
  EXPECT_DOUBLE_EQ(w(995), 0.5);
  EXPECT_DOUBLE_EQ(weight_eval(w, 992.5), 0.25);
  EXPECT_EQ(w(0), 0.0);
  EXPECT_EQ(w(5000), 0.0);
}

TEST(TrapezoidWeight, RejectsBadParameters) {
  EXPECT_THROW(TrapezoidWeight(1000, 100, 1), DomainError);
  EXPECT_THROW(TrapezoidWeight(1000, 5, 10), DomainError);
  EXPECT_THROW(TrapezoidWeight(50, 100, 10), DomainError);
  EXPECT_NO_THROW(TrapezoidWeight(10, 10, 10));
}

TEST(Psi1, KnownValues) {
  EXPECT_EQ(psi1_exact(1.0, base()), 0.0);
  const double expected = 16 * std::log(2.0) + 8 * std::log(3.0) + 5 * std::log(5.0) + 3 * std::log(7.0);
  EXPECT_NEAR(psi1_exact(10.0, base()), expected, 1e-12);
  EXPECT_NEAR(psi1_exact(10.0, base()), 33.764173207640, 1e-9);
  EXPECT_THROW(psi1_exact(0.5, base()), DomainError);
}

TEST(Psi1, EqualsIntegralOfPsi) {
  // psi is constant on [n, n+1), so the integral is an exact sum.
  double integral = 0.0;
  for (std::uint64_t n = 1; n < 1000; ++n) integral += oracle::psi(n);
  EXPECT_NEAR(psi1_exact(1000.0, base()), integral, 1e-9 * integral);
}

TEST(Psi1, PiecewiseLinearWithSlopePsi) {
  for (double x : {10.5, 97.25, 1234.5, 50'000.5}) {
    const double eps = 1e-3;
    const double slope = (psi1_exact(x + eps, base()) - psi1_exact(x, base())) / eps;
    EXPECT_NEAR(slope, oracle::psi(static_cast<std::uint64_t>(x)), 1e-5 * slope) << x;
  }
}

TEST(SDelta, DirectMatchesNaive) {
  const TrapezoidWeight w(1000, 100, 10);
  EXPECT_NEAR(s_delta_direct(w, base()), oracle::s_delta(1000, 100, 10), 1e-10);
}

TEST(SDelta, EmptySupportGivesZero) {
  // (1336, 1354) holds no prime powers.
  const TrapezoidWeight w(1340, 10, 4);
  EXPECT_EQ(s_delta_direct(w, base()), 0.0);
  EXPECT_NEAR(s_delta_via_psi1(w, base()), 0.0, 1e-9);
}

TEST(SDelta, DominatesSharpCount) {
  for (double x : {1000.0, 5000.0, 77'777.0}) {
    const TrapezoidWeight w(x, 200, 20);
    const auto xi = static_cast<std::uint64_t>(x);
    EXPECT_GE(s_delta_direct(w, base()), psi(xi + 200, base()) - psi(xi, base()));
  }
}

TEST(SDelta, Psi1IdentityAgreesWithDirectSum) {
  const TrapezoidWeight w(1000, 100, 10);
  const double direct = s_delta_direct(w, base());
  EXPECT_NEAR(s_delta_via_psi1(w, base()), direct, 1e-9 * direct);

  for (double x : {8.0, 20.0, 64.0, 250.0}) {
    const TrapezoidWeight half(x, x / 2, x / 2);
    const double naive = oracle::s_delta(x, x / 2, x / 2);
    EXPECT_NEAR(s_delta_via_psi1(half, base()), naive, 1e-9 * std::max(1.0, naive)) << x;
    EXPECT_NEAR(s_delta_direct(half, base()), naive, 1e-9 * std::max(1.0, naive)) << x;
  }
}

TEST(SDelta, Psi1IdentityOnRandomTriples) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> logx(std::log(4.0), std::log(1e6));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 30; ++i) {
    const double x = std::exp(logx(rng));
    const double h = 2.0 + (x - 2.0) * std::pow(unit(rng), 3);
    const double d = 2.0 + (h - 2.0) * unit(rng);
    const TrapezoidWeight w(x, h, d);
    const double direct = s_delta_direct(w, base());
    const double via = s_delta_via_psi1(w, base());
    EXPECT_NEAR(via, direct, 1e-8 * std::max(direct, 1e-300) + 1e-12) << x << " " << h << " " << d;
  }
}

TEST(TransferTerm, AlgebraicProbeAtRhoOne) {
  for (auto [x, h, d] : {std::tuple{1000.0, 100.0, 10.0}, std::tuple{1e6, 5e3, 2.0}, std::tuple{50.0, 50.0, 50.0}}) {
    const TrapezoidWeight w(x, h, d);
    const auto s = transfer_term({1.0, 0.0}, w);
    EXPECT_NEAR(s.real(), d * (h + d), 1e-9 * d * (h + d));
    EXPECT_NEAR(s.imag(), 0.0, 1e-9);
  }
  const TrapezoidWeight w(1000, 100, 10);
  EXPECT_THROW(s_rho(0.0, w), DomainError);
  EXPECT_THROW(transfer_term({-1.0, 0.0}, w), DomainError);
}

TEST(TransferTerm, MatchesDirectPowers) {
  // Straight evaluation in long double as a reference.
  const TrapezoidWeight w(5000, 300, 40);
  for (double gamma : {14.134725142, 100.0, 1234.5}) {
    using cl = std::complex<long double>;
    const cl rho{0.5L, gamma};
    auto pw = [&](long double t) { return std::exp((rho + 1.0L) * std::log(t)); };
    const cl ref = (pw(5340) - pw(5300) - pw(5000) + pw(4960)) / (rho * (rho + 1.0L));
    const auto got = s_rho(gamma, w);
    EXPECT_NEAR(got.real(), static_cast<double>(ref.real()), 1e-7 * std::abs(ref)) << gamma;
    EXPECT_NEAR(got.imag(), static_cast<double>(ref.imag()), 1e-7 * std::abs(ref)) << gamma;
  }
}

TEST(TransferTerm, BoundedByFourPowerOverGammaSquared) {
  for (double x : {1e3, 1e5, 1e7}) {
    for (double frac : {0.001, 0.01, 0.3}) {
      const double h = std::max(2.0, x * frac);
      const double d = std::max(2.0, h / 7);
      const TrapezoidWeight w(x, h, d);
      for (double gamma : {14.13, 50.0, 500.0, 5000.0, 50'000.0}) {
        EXPECT_LE(std::abs(s_rho(gamma, w)), 4 * std::pow(x + h + d, 1.5) / (gamma * gamma)) << x << " " << gamma;
      }
    }
  }
}

TEST(TransferTerm, MatchesDoubleIntegralForm) {
  // S(rho) = int_{x+h}^{x+h+d} int_{u-h-d}^{u} t^{rho-1} dt du, integrated numerically.
  using boost::math::quadrature::gauss_kronrod;
  const double x = 100, h = 20, d = 5, gamma = 14.134725142;
  const std::complex<double> rho{0.5, gamma};
  auto inner = [&](double u, bool imag) {
    auto f = [&](double t) {
      const auto v = std::exp((rho - 1.0) * std::log(t));
      return imag ? v.imag() : v.real();
    };
    return gauss_kronrod<double, 61>::integrate(f, u - h - d, u, 10, 1e-14);
  };
  const double re = gauss_kronrod<double, 31>::integrate([&](double u) { return inner(u, false); }, x + h, x + h + d, 10, 1e-13);
  const double im = gauss_kronrod<double, 31>::integrate([&](double u) { return inner(u, true); }, x + h, x + h + d, 10, 1e-13);
  const auto s = s_rho(gamma, TrapezoidWeight(x, h, d));
  EXPECT_NEAR(s.real(), re, 1e-8 * std::abs(s));
  EXPECT_NEAR(s.imag(), im, 1e-8 * std::abs(s));
  // Trivial bound h d (x - d)^{-1/2} from |t^{rho-1}| = t^{-1/2}.
  EXPECT_LE(std::abs(s), (h + d) * d / std::sqrt(x - d));
}

TEST(Psi1ViaZeros, SelfConsistencyAt1e4) {
  const auto table = full_table().truncated(10'000);
  const double exact = psi1_exact(1e4, base());
  const auto via = psi1_via_zeros(1e4, table);
  EXPECT_LT(std::fabs(via.value - exact) / exact, 1e-3);
  EXPECT_LE(std::fabs(via.value - exact), via.remainder_bound);
  EXPECT_EQ(via.zeros_used, 10'000u);
}

TEST(Psi1ViaZeros, ImprovesWithTruncation) {
  for (double x : {1e3 + 0.5, 1e4, 3.3e4}) {
    const double exact = psi1_exact(x, base());
    const double coarse = std::fabs(psi1_via_zeros(x, full_table().truncated(10)).value - exact);
    const double fine = std::fabs(psi1_via_zeros(x, full_table().truncated(10'000)).value - exact);
    EXPECT_LT(fine, coarse) << x;
  }
}

TEST(Psi1ViaZeros, TrivialZeroTailAtSmallX) {
  for (double x : {2.5, 10.5, 100.0}) {
    const double exact = psi1_exact(x, base());
    const auto without = psi1_via_zeros(x, full_table(), false);
    const auto with = psi1_via_zeros(x, full_table(), true);
    EXPECT_LE(std::fabs(with.value - exact), std::fabs(without.value - exact) + 1e-9) << x;
    EXPECT_LE(std::fabs(with.value - exact), with.remainder_bound) << x;
  }
}

TEST(Psi1ViaZeros, ThreadCountIsBitReproducible) {
  const auto a = psi1_via_zeros(12'345.5, full_table(), true, 1);
  const auto b = psi1_via_zeros(12'345.5, full_table(), true, 4);
  EXPECT_EQ(a.value, b.value);
  EXPECT_THROW(psi1_via_zeros(1.0, full_table()), DomainError);
  EXPECT_THROW(psi1_via_zeros(100.0, full_table().truncated(0)), IntegrityError);
}

TEST(ZeroSumBreakdown, PartitionAndBoundedRatios) {
  const TrapezoidWeight w(1e5, 1e3, 1e2);
  const auto br = zero_sum_breakdown(w, full_table());
  double full = 0.0;
  for (const double g : full_table().ordinates()) full += 2.0 * s_rho(g, w).real();
  EXPECT_NEAR(br.total(), full, 1e-9 * std::fabs(full) + 1e-9);
  EXPECT_EQ(br.low_count, count_below(full_table(), 100.0));
  EXPECT_LE(br.low_ratio, 10.0);
  EXPECT_LE(br.mid_ratio, 10.0);
  EXPECT_LE(br.high_ratio, 10.0);
  EXPECT_GT(br.remainder_bound, 0.0);
}

TEST(ZeroSumBreakdown, DegenerateAndCoverage) {
  const auto br = zero_sum_breakdown(TrapezoidWeight(1e4, 50, 50), full_table());
  EXPECT_EQ(br.mid, 0.0);
  EXPECT_EQ(br.mid_count, 0u);
  EXPECT_THROW(zero_sum_breakdown(TrapezoidWeight(1e6, 100, 10), full_table()), CoverageError);
}

TEST(SDeltaViaZeros, PredictionWithinRemainder) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> logx(std::log(1e3), std::log(1e6));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 12; ++i) {
    const double x = std::exp(logx(rng));
    const double h = std::max(4.0, x * std::pow(10.0, -3.0 * unit(rng)) / 2);
    const double d = std::max(2.0, h * (0.05 + 0.9 * unit(rng)));
    const TrapezoidWeight w(x, h, d);
    const auto pred = s_delta_via_zeros(w, full_table());
    const double direct = s_delta_direct(w, base());
    EXPECT_LE(std::fabs(pred.value - direct), 10 * pred.remainder_bound) << x << " " << h << " " << d;
  }
}

}  // namespace
}  // namespace ppc
