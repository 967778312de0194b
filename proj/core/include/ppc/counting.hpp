#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ppc/arith.hpp"

namespace ppc {

// Beyond k = 64 only m = 1 contributes for any 64-bit x.
inline constexpr int kMaxK = 64;
inline constexpr std::uint64_t kOracleCeiling = 10'000'000;

enum class CountMethod { PairEnumeration, KfreeOracle };

std::string_view to_string(CountMethod method);

/// C_k(x) = #{n <= x : n = p m^k} together with its main term
/// zeta(k) li(x) and the normalized error
/// e_k(x) = (C_k(x) - zeta(k) li(x)) / (x^{1/2} log^{A(k)} x).
/// main_term and normalized_error are empty for x < 2.
struct CountResult {
  std::uint64_t x = 0;
  int k = 2;
  std::uint64_t count = 0;
  std::optional<double> main_term;
  std::optional<double> normalized_error;
  int A = 2;
  CountMethod method = CountMethod::PairEnumeration;
};

CountResult make_count_result(std::uint64_t x, int k, std::uint64_t count, CountMethod method);

/// sum_{m <= x^{1/k}} pi(x / m^k), with m running downward so the pi
/// queries ascend and share one sieve pass. base must cover x.
CountResult count_exact(std::uint64_t x, int k, const PrimeTable& base, const SieveConfig& config = {});

/// count_exact at every point of an ascending list, sharing one sieve pass.
std::vector<CountResult> count_exact_many(std::span<const std::uint64_t> ascending, int k, const PrimeTable& base,
                                          const SieveConfig& config = {});

/// #{n <= x : the k-free part of n is prime}, by decomposing every n.
/// Throws CapacityError beyond kOracleCeiling.
std::uint64_t count_oracle(std::uint64_t x, int k);

/// Element j is count_oracle(j, k) for 0 <= j <= x.
std::vector<std::uint64_t> count_oracle_prefix(std::uint64_t x, int k);

struct CStarResult {
  double value = 0.0;
  /// (C*_k(x) - zeta(k) x) / (x^{1/2} log^{A(k)} x); empty for x < 2.
  std::optional<double> normalized_error;
};

/// C*_k(x) = sum_{n m^k <= x} Lambda(n) = sum_m psi(x / m^k).
CStarResult cstar(std::uint64_t x, int k, const PrimeTable& base, const SieveConfig& config = {});

struct PrimePowerCorrection {
  double value = 0.0;
  /// value / (x^{1/2} log x) for k = 2, value / x^{1/2} otherwise; 0 for x < 2.
  double ratio = 0.0;
};

/// sum of log p over p^r m^k <= x with r >= 2.
PrimePowerCorrection prime_power_correction(std::uint64_t x, int k, const PrimeTable& base,
                                            const SieveConfig& config = {});

/// sum of log p over p m^k <= x, i.e. sum_m theta(x / m^k).
double prime_log_sum(std::uint64_t x, int k, const PrimeTable& base, const SieveConfig& config = {});

/// C_k(x + h) - C_k(x), sieving only the windows (x/m^k, (x+h)/m^k].
/// base must cover x + h.
std::uint64_t count_interval(std::uint64_t x, std::uint64_t h, int k, const PrimeTable& base,
                             const SieveConfig& config = {});

/// sum of log p over x < p m^k <= x + h.
double log_sum_interval(std::uint64_t x, std::uint64_t h, int k, const PrimeTable& base,
                        const SieveConfig& config = {});

/// sum over n m^k in the trapezoid support of w(n m^k) Lambda(n).
double weighted_lambda_sum(double x, double h, double delta, int k, const PrimeTable& base,
                           const SieveConfig& config = {});

/// Short-interval experiment at scale f: h = f x^{1/2} log^{A(k)} x and
/// delta = f^{1/2} x^{1/2} log^{A(k)} x (both rounded to integers).
struct ShortIntervalReport {
  std::uint64_t x = 0;
  int k = 2;
  double f = 0.0;
  std::uint64_t h = 0;
  std::uint64_t delta = 0;
  int A = 2;
  std::uint64_t count = 0;
  double expected_count = 0.0;    // zeta(k) int_x^{x+h} dt/log t
  double count_deviation = 0.0;   // count / expected_count - 1
  double log_sum = 0.0;           // sum of log p over x < p m^k <= x + h
  double log_deviation = 0.0;     // log_sum / (zeta(k) h) - 1
  double weighted_sum = 0.0;      // weighted_lambda_sum(x, h, delta)
  double weighted_deviation = 0.0;  // weighted_sum / (zeta(k) (h + delta)) - 1
  double prime_weighted_sum = 0.0;  // S_delta(x, h), primes and prime powers only (m = 1)
  double predicted_scale = 0.0;   // f^{-1/2}
};

/// Throws DomainError unless f > 1 and the derived h satisfies h <= x.
ShortIntervalReport short_interval_experiment(std::uint64_t x, double f, int k, const PrimeTable& base,
                                              const SieveConfig& config = {});

/// Expected short-interval count zeta(k) int_x^{x+h} dt/log t.
double short_interval_main_term(std::uint64_t x, std::uint64_t h, int k);

}  // namespace ppc
