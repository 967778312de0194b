#include "ppc/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ppc/compensated.hpp"
#include "ppc/errors.hpp"
#include "ppc/parallel.hpp"
#include "sieve.hpp"

namespace ppc {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> small_sieve(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<std::uint8_t> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

void require_cover(const PrimeTable& base, std::uint64_t hi) {
  if (!base.covers(hi)) {
    throw PreconditionError("base prime table (limit " + std::to_string(base.limit()) +
                            ") does not reach sqrt(" + std::to_string(hi) + ")");
  }
}

// Prime powers p^r with r >= 2 and lo < p^r <= hi, ascending in n.
std::vector<PrimePower> higher_prime_powers(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base) {
  std::vector<PrimePower> out;
  const auto primes = base.primes();
  const auto logs = base.logs();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (p > hi / p) break;
    std::uint64_t pw = p * p;
    for (unsigned r = 2;; ++r) {
      if (pw > lo) out.push_back({pw, logs[i], p, r});
      if (pw > hi / p) break;
      pw *= p;
      if (pw > hi) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.n < b.n; });
  return out;
}

const PrimeTable& trial_division_table() {
  // Reaches (2^64)^(1/3), enough to decompose any 64-bit n.
  static const PrimeTable table = sieve_primes(2'642'246);
  return table;
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::uint64_t iroot(std::uint64_t n, unsigned r) {
  if (r == 0) throw DomainError("iroot: r must be positive");
  if (r == 1 || n < 2) return n;
  if (r == 2) return isqrt(n);
  if (r >= 64) return 1;
  auto x = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / r));
  auto fits = [&](std::uint64_t v) {
    const auto pw = checked_pow(v, r);
    return pw && *pw <= n;
  };
  while (x > 0 && !fits(x)) --x;
  while (fits(x + 1)) ++x;
  return x;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (const auto p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (const auto a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

bool PrimeTable::covers(std::uint64_t n) const noexcept {
  return static_cast<u128>(limit_) * limit_ >= n;
}

std::uint64_t PrimeTable::pi(std::uint64_t y) const {
  if (y > limit_) {
    throw PreconditionError("pi(" + std::to_string(y) + ") beyond table limit " + std::to_string(limit_));
  }
  return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), y) - primes_.begin());
}

PrimeTable sieve_primes(std::uint64_t limit, const SieveConfig& config) {
  if (limit < 2) throw DomainError("sieve_primes: limit must be at least 2");

  const double ln = std::log(static_cast<double>(limit));
  const double estimated_count = limit < 100 ? 25.0 : 1.26 * static_cast<double>(limit) / ln;
  const double estimated_bytes =
      estimated_count * (sizeof(std::uint64_t) + sizeof(double)) + static_cast<double>(config.segment_length);
  if (estimated_bytes > static_cast<double>(config.memory_budget_bytes)) {
    throw CapacityError("prime table to " + std::to_string(limit) + " needs ~" +
                        std::to_string(static_cast<std::uint64_t>(estimated_bytes)) + " bytes, over budget");
  }

  PrimeTable table;
  table.limit_ = limit;
  const std::uint64_t root = isqrt(limit);
  table.primes_ = small_sieve(root);
  table.primes_.reserve(static_cast<std::size_t>(estimated_count));

  const std::vector<std::uint64_t> sieving(table.primes_);
  detail::OddSegment segment;
  for (const auto& [a, b] : detail::split_range(root + 1, limit, config.segment_length)) {
    segment.sieve(a, b, sieving);
    segment.for_each_prime([&](std::uint64_t p) { table.primes_.push_back(p); });
  }

  table.logs_.resize(table.primes_.size());
  std::transform(table.primes_.begin(), table.primes_.end(), table.logs_.begin(),
                 [](std::uint64_t p) { return std::log(static_cast<double>(p)); });
  return table;
}

PrimeTable base_table_for(std::uint64_t n, const SieveConfig& config) {
  return sieve_primes(std::max<std::uint64_t>(isqrt(n) + 1, 2), config);
}

std::uint64_t prime_count_interval(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base,
                                   const SieveConfig& config) {
  if (lo > hi) throw PreconditionError("prime_count_interval: lo exceeds hi");
  if (lo == hi) return 0;

  std::uint64_t count = 0;
  if (lo < base.limit()) {
    const std::uint64_t top = std::min(hi, base.limit());
    count += base.pi(top) - base.pi(lo);
    lo = top;
    if (lo == hi) return count;
  }
  require_cover(base, hi);

  const auto chunks = detail::split_range(lo + 1, hi, config.segment_length);
  const auto partial = parallel_indexed(chunks.size(), config.threads, [&](std::size_t i) {
    detail::OddSegment segment;
    segment.sieve(chunks[i].first, chunks[i].second, base.primes());
    return segment.count();
  });
  for (const auto c : partial) count += c;
  return count;
}

std::vector<std::uint64_t> prime_pi_many(std::span<const std::uint64_t> ascending, const PrimeTable& base,
                                         const SieveConfig& config) {
  std::vector<std::uint64_t> out;
  out.reserve(ascending.size());
  std::uint64_t prev = 0;
  std::uint64_t acc = 0;
  for (const auto q : ascending) {
    if (q < prev) throw PreconditionError("prime_pi_many: queries must be ascending");
    acc += prime_count_interval(prev, q, base, config);
    prev = q;
    out.push_back(acc);
  }
  return out;
}

namespace {

CompensatedSum theta_sum(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base, const SieveConfig& config) {
  CompensatedSum sum;
  if (lo >= hi) return sum;
  if (lo < base.limit()) {
    const auto primes = base.primes();
    const auto logs = base.logs();
    auto it = std::upper_bound(primes.begin(), primes.end(), lo);
    for (; it != primes.end() && *it <= hi; ++it) sum.add(logs[static_cast<std::size_t>(it - primes.begin())]);
    lo = std::min(hi, base.limit());
    if (lo == hi) return sum;
  }
  require_cover(base, hi);

  const auto chunks = detail::split_range(lo + 1, hi, config.segment_length);
  const auto partial = parallel_indexed(chunks.size(), config.threads, [&](std::size_t i) {
    detail::OddSegment segment;
    segment.sieve(chunks[i].first, chunks[i].second, base.primes());
    CompensatedSum s;
    segment.for_each_prime([&](std::uint64_t p) { s.add(std::log(static_cast<double>(p))); });
    return s;
  });
  for (const auto& s : partial) sum += s;
  return sum;
}

}  // namespace

double theta_interval(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base, const SieveConfig& config) {
  if (lo > hi) throw PreconditionError("theta_interval: lo exceeds hi");
  return theta_sum(lo, hi, base, config).value();
}

std::vector<double> theta_many(std::span<const std::uint64_t> ascending, const PrimeTable& base,
                               const SieveConfig& config) {
  std::vector<double> out;
  out.reserve(ascending.size());
  std::uint64_t prev = 0;
  CompensatedSum acc;
  for (const auto q : ascending) {
    if (q < prev) throw PreconditionError("theta_many: queries must be ascending");
    acc += theta_sum(prev, q, base, config);
    prev = q;
    out.push_back(acc.value());
  }
  return out;
}

std::vector<double> psi_many(std::span<const std::uint64_t> ascending, const PrimeTable& base,
                             const SieveConfig& config) {
  if (ascending.empty()) return {};
  if (!std::is_sorted(ascending.begin(), ascending.end())) {
    throw PreconditionError("psi_many: queries must be ascending");
  }
  require_cover(base, ascending.back());
  const auto powers = higher_prime_powers(0, ascending.back(), base);

  std::vector<double> out;
  out.reserve(ascending.size());
  std::uint64_t prev = 0;
  CompensatedSum acc;
  std::size_t next_power = 0;
  for (const auto q : ascending) {
    acc += theta_sum(prev, q, base, config);
    for (; next_power < powers.size() && powers[next_power].n <= q; ++next_power) acc.add(powers[next_power].log_p);
    prev = q;
    out.push_back(acc.value());
  }
  return out;
}

double psi(std::uint64_t x, const PrimeTable& base, const SieveConfig& config) {
  const std::array<std::uint64_t, 1> q{x};
  return psi_many(q, base, config).front();
}

// ---------------------------------------------------------------------------

double LambdaSegment::lambda(std::uint64_t n) const {
  if (n <= lo || n > hi) throw DomainError("lambda: n outside segment");
  const auto it = std::lower_bound(entries.begin(), entries.end(), n,
                                   [](const PrimePower& e, std::uint64_t v) { return e.n < v; });
  return (it != entries.end() && it->n == n) ? it->log_p : 0.0;
}

void visit_prime_powers(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base, const SieveConfig& config,
                        const std::function<void(std::span<const PrimePower>)>& visit) {
  if (lo > hi) throw PreconditionError("visit_prime_powers: lo exceeds hi");
  if (lo == hi) return;
  require_cover(base, hi);
  const auto powers = higher_prime_powers(lo, hi, base);
  std::size_t next_power = 0;

  detail::OddSegment segment;
  std::vector<PrimePower> batch;
  for (const auto& [a, b] : detail::split_range(lo + 1, hi, config.segment_length)) {
    batch.clear();
    segment.sieve(a, b, base.primes());
    std::size_t base_index = 0;
    segment.for_each_prime([&](std::uint64_t p) {
      for (; next_power < powers.size() && powers[next_power].n < p; ++next_power) batch.push_back(powers[next_power]);
      double log_p;
      if (p <= base.limit()) {
        const auto primes = base.primes();
        base_index = static_cast<std::size_t>(std::lower_bound(primes.begin() + static_cast<std::ptrdiff_t>(base_index),
                                                               primes.end(), p) -
                                              primes.begin());
        log_p = base.logs()[base_index];
      } else {
        log_p = std::log(static_cast<double>(p));
      }
      batch.push_back({p, log_p, p, 1});
    });
    for (; next_power < powers.size() && powers[next_power].n <= b; ++next_power) batch.push_back(powers[next_power]);
    if (!batch.empty()) visit(batch);
  }
}

LambdaSegment lambda_segment(std::uint64_t lo, std::uint64_t hi, const PrimeTable& base, const SieveConfig& config) {
  LambdaSegment seg{lo, hi, {}};
  visit_prime_powers(lo, hi, base, config, [&](std::span<const PrimePower> batch) {
    seg.entries.insert(seg.entries.end(), batch.begin(), batch.end());
  });
  return seg;
}

std::optional<PrimePowerRoot> is_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  for (unsigned r = 1; r < 64; ++r) {
    const std::uint64_t root = iroot(n, r);
    if (root < 2) break;
    const auto pw = checked_pow(root, r);
    if (pw && *pw == n && is_prime(root)) return PrimePowerRoot{root, r};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

KfreeDecomposition kfree_decompose(std::uint64_t n, unsigned k) {
  return kfree_decompose(n, k, trial_division_table());
}

KfreeDecomposition kfree_decompose(std::uint64_t n, unsigned k, const PrimeTable& base) {
  if (n == 0) throw DomainError("kfree_decompose: n must be positive");
  if (k < 2) throw DomainError("kfree_decompose: k must be at least 2");

  KfreeDecomposition out{n, k, 1, 1};
  auto absorb = [&](std::uint64_t p, unsigned e) {
    out.q *= *checked_pow(p, e % k);
    out.m *= *checked_pow(p, e / k);
  };

  std::uint64_t rem = n;
  bool finished = false;
  for (const std::uint64_t p : base.primes()) {
    if (p > rem / p / p) {
      finished = true;
      break;
    }
    if (rem % p != 0) continue;
    unsigned e = 0;
    while (rem % p == 0) {
      rem /= p;
      ++e;
    }
    absorb(p, e);
  }
  if (!finished && rem > 1) {
    const std::uint64_t last = base.primes().empty() ? 1 : base.primes().back();
    if (last <= rem / last / last) {
      throw PreconditionError("kfree_decompose: base table does not reach cbrt(" + std::to_string(n) + ")");
    }
  }

  // rem now has at most two prime factors, all beyond the trial bound.
  if (rem > 1) {
    if (is_prime(rem)) {
      absorb(rem, 1);
    } else if (const std::uint64_t s = isqrt(rem); s * s == rem) {
      absorb(s, 2);
    } else {
      out.q *= rem;  // two distinct primes, each to the first power
    }
  }
  return out;
}

}  // namespace ppc
