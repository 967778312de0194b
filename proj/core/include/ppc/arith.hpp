#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ppc {

/// Tuning knobs shared by every sieve-backed operation.
struct SieveConfig {
  /// Width of one sieve segment. Segments are the unit of parallel work.
  std::uint64_t segment_length = std::uint64_t{1} << 20;
  /// Largest x for which exact counting (a full sieve pass to x) is attempted.
  std::uint64_t sieve_ceiling = 10'000'000'000ULL;
  /// Upper bound on the memory a PrimeTable may occupy.
  std::size_t memory_budget_bytes = std::size_t{1} << 30;
  unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Integer helpers

/// floor(sqrt(n)), exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n);

/// floor(n^(1/r)) for r >= 1, exact.
std::uint64_t iroot(std::uint64_t n, unsigned r);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp);

/// Deterministic Miller-Rabin; exact for every 64-bit n.
bool is_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Prime tables and segmented sieving

/// Immutable ascending list of all primes <= limit, with log p cached once per prime.
class PrimeTable {
 public:
  PrimeTable() = default;

  std::uint64_t limit() const noexcept { return limit_; }
  std::span<const std::uint64_t> primes() const noexcept { return primes_; }
  std::span<const double> logs() const noexcept { return logs_; }
  std::size_t size() const noexcept { return primes_.size(); }

  /// True when the table reaches sqrt(n), i.e. it can sieve any range ending at n.
  bool covers(std::uint64_t n) const noexcept;

  /// pi(y) for y <= limit(), by binary search.
  std::uint64_t pi(std::uint64_t y) const;

 private:
  friend PrimeTable sieve_primes(std::uint64_t limit, const SieveConfig& config);

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> primes_;
  std::vector<double> logs_;
};

/// All primes up to `limit`. Throws DomainError for limit < 2 and
/// CapacityError when the table would exceed config.memory_budget_bytes.
PrimeTable sieve_primes(std::uint64_t limit, const SieveConfig& config = {});

/// A PrimeTable large enough to sieve any range ending at n.
PrimeTable base_table_for(std::uint64_t n, const SieveConfig& config = {});

/// #{p prime : lo < p <= hi}. Requires base.covers(hi).
std::uint64_t prime_count_interval(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base,
                                   const SieveConfig& config = {});

/// pi(q) at every point of an ascending query list, using a single sieve pass.
std::vector<std::uint64_t> prime_pi_many(std::span<const std::uint64_t> ascending, const PrimeTable& base,
                                         const SieveConfig& config = {});

/// Sum of log p over primes lo < p <= hi. Requires base.covers(hi).
double theta_interval(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base, const SieveConfig& config = {});

/// theta(q) = sum of log p over p <= q at every point of an ascending query list.
std::vector<double> theta_many(std::span<const std::uint64_t> ascending, const PrimeTable& base,
                               const SieveConfig& config = {});

// ---------------------------------------------------------------------------
// von Mangoldt function

/// n = p^r, so Lambda(n) = log p.
struct PrimePower {
  std::uint64_t n = 0;
  double log_p = 0.0;
  std::uint64_t p = 0;
  unsigned r = 0;
};

/// Every prime power in the half-open range (lo, hi], ascending in n.
struct LambdaSegment {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<PrimePower> entries;

  /// Lambda(n) for lo < n <= hi (zero when n is not a prime power).
  double lambda(std::uint64_t n) const;
};

LambdaSegment lambda_segment(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base,
                             const SieveConfig& config = {});

/// Streams the prime powers of (lo, hi] to `visit` in ascending batches.
/// Batches follow segment order, so the concatenated stream is ascending in n.
void visit_prime_powers(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base, const SieveConfig& config,
                        const std::function<void(std::span<const PrimePower>)>& visit);

/// Chebyshev psi(x) = sum_{n <= x} Lambda(n), compensated.
double psi(std::uint64_t x, const PrimeTable& base, const SieveConfig& config = {});

/// psi at every point of an ascending query list in one pass.
std::vector<double> psi_many(std::span<const std::uint64_t> ascending, const PrimeTable& base,
                             const SieveConfig& config = {});

/// The (p, r) with n = p^r, or nullopt when n is not a prime power (including n = 1).
struct PrimePowerRoot {
  std::uint64_t p = 0;
  unsigned r = 0;
  friend bool operator==(const PrimePowerRoot&, const PrimePowerRoot&) = default;
};
std::optional<PrimePowerRoot> is_prime_power(std::uint64_t n);

// ---------------------------------------------------------------------------
// k-free decomposition

/// The unique n = q * m^k with q k-free.
struct KfreeDecomposition {
  std::uint64_t n = 0;
  unsigned k = 0;
  std::uint64_t q = 0;
  std::uint64_t m = 0;
};

/// Trial division by primes up to n^(1/3), then the cofactor (which has at
/// most two prime factors) is classified by primality and square tests.
/// Throws DomainError for n == 0 or k < 2.
KfreeDecomposition kfree_decompose(std::uint64_t n, unsigned k);

/// Same, trial dividing by `base` (which must reach n^(1/3)).
KfreeDecomposition kfree_decompose(std::uint64_t n, unsigned k, const PrimeTable& base);

}  // namespace ppc
