#include "ppc/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ppc/analytic.hpp"
#include "ppc/compensated.hpp"
#include "ppc/errors.hpp"
#include "ppc/explicit_formula.hpp"

namespace ppc {

namespace {

// Windows narrower than this are resolved by primality tests instead of a sieve.
constexpr std::uint64_t kDirectWindow = 64;

void check_k(int k) {
  if (k < 2 || k > kMaxK) throw DomainError("k must lie in [2, 64], got " + std::to_string(k));
}

void check_ceiling(std::uint64_t x, const SieveConfig& config) {
  if (x > config.sieve_ceiling) {
    throw CapacityError("x = " + std::to_string(x) + " exceeds the sieve ceiling " +
                        std::to_string(config.sieve_ceiling));
  }
}

void check_cover(std::uint64_t x, const PrimeTable& base) {
  if (!base.covers(x)) {
    throw PreconditionError("base prime table (limit " + std::to_string(base.limit()) + ") does not reach sqrt(" +
                            std::to_string(x) + ")");
  }
}

// x / m^k for m = m_max .. 1, i.e. ascending.
std::vector<std::uint64_t> quotients(std::uint64_t x, int k) {
  const auto ku = static_cast<unsigned>(k);
  const std::uint64_t m_max = iroot(x, ku);
  std::vector<std::uint64_t> out;
  out.reserve(m_max);
  for (std::uint64_t m = m_max; m >= 1; --m) out.push_back(x / *checked_pow(m, ku));
  return out;
}

double normalizer(double x, int A) { return std::sqrt(x) * std::pow(std::log(x), A); }

}  // namespace

std::string_view to_string(CountMethod method) {
  switch (method) {
    case CountMethod::PairEnumeration:
      return "pair-enumeration";
    case CountMethod::KfreeOracle:
      return "kfree-oracle";
  }
  return "unknown";
}

CountResult make_count_result(std::uint64_t x, int k, std::uint64_t count, CountMethod method) {
  const auto exps = exponents(k);
  CountResult r{x, k, count, std::nullopt, std::nullopt, exps.A, method};
  if (x >= 2) {
    const auto xd = static_cast<double>(x);
    const double main = zeta_int(k) * li(xd);
    r.main_term = main;
    r.normalized_error = (static_cast<double>(count) - main) / normalizer(xd, exps.A);
  }
  return r;
}

std::vector<CountResult> count_exact_many(std::span<const std::uint64_t> ascending, int k, const PrimeTable& base,
                                          const SieveConfig& config) {
  check_k(k);
  if (!std::is_sorted(ascending.begin(), ascending.end())) {
    throw PreconditionError("count_exact_many: x values must be ascending");
  }
  if (ascending.empty()) return {};
  check_ceiling(ascending.back(), config);
  check_cover(ascending.back(), base);

  std::vector<std::vector<std::uint64_t>> per_x;
  std::vector<std::uint64_t> all;
  per_x.reserve(ascending.size());
  for (const auto x : ascending) {
    per_x.push_back(quotients(x, k));
    all.insert(all.end(), per_x.back().begin(), per_x.back().end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  const auto pis = prime_pi_many(all, base, config);

  std::vector<CountResult> out;
  out.reserve(ascending.size());
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    std::uint64_t count = 0;
    for (const auto y : per_x[i]) {
      count += pis[static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), y) - all.begin())];
    }
    out.push_back(make_count_result(ascending[i], k, count, CountMethod::PairEnumeration));
  }
  return out;
}

CountResult count_exact(std::uint64_t x, int k, const PrimeTable& base, const SieveConfig& config) {
  if (x == 0) throw DomainError("count_exact: x must be positive");
  const std::uint64_t xs[] = {x};
  return count_exact_many(xs, k, base, config).front();
}

std::vector<std::uint64_t> count_oracle_prefix(std::uint64_t x, int k) {
  check_k(k);
  if (x > kOracleCeiling) {
    throw CapacityError("count_oracle: x = " + std::to_string(x) + " beyond oracle ceiling " +
                        std::to_string(kOracleCeiling));
  }
  const auto base = sieve_primes(std::max<std::uint64_t>(iroot(x, 3) + 2, 2));
  std::vector<std::uint64_t> prefix(x + 1, 0);
  for (std::uint64_t n = 1; n <= x; ++n) {
    const auto d = kfree_decompose(n, static_cast<unsigned>(k), base);
    prefix[n] = prefix[n - 1] + (is_prime(d.q) ? 1 : 0);
  }
  return prefix;
}

std::uint64_t count_oracle(std::uint64_t x, int k) {
  if (x == 0) throw DomainError("count_oracle: x must be positive");
  return count_oracle_prefix(x, k).back();
}

CStarResult cstar(std::uint64_t x, int k, const PrimeTable& base, const SieveConfig& config) {
  check_k(k);
  check_ceiling(x, config);
  check_cover(x, base);
  if (x == 0) throw DomainError("cstar: x must be positive");
  const auto ys = quotients(x, k);
  const auto psis = psi_many(ys, base, config);
  CompensatedSum sum;
  for (std::size_t i = psis.size(); i-- > 0;) sum.add(psis[i]);

  CStarResult out{sum.value(), std::nullopt};
  if (x >= 2) {
    const auto xd = static_cast<double>(x);
    out.normalized_error = (out.value - zeta_int(k) * xd) / normalizer(xd, exponents(k).A);
  }
  return out;
}

PrimePowerCorrection prime_power_correction(std::uint64_t x, int k, const PrimeTable& base,
                                            const SieveConfig& config) {
  check_k(k);
  check_ceiling(x, config);
  check_cover(x, base);
  const auto primes = base.primes();
  const auto logs = base.logs();
  CompensatedSum sum;
  for (const std::uint64_t y : quotients(x, k)) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      if (p > y / p) break;
      // Number of r >= 2 with p^r <= y.
      unsigned powers = 0;
      for (std::uint64_t pw = p * p;; pw *= p) {
        ++powers;
        if (pw > y / p) break;
      }
      sum.add(powers * logs[i]);
    }
  }
  PrimePowerCorrection out{sum.value(), 0.0};
  if (x >= 2) {
    const auto xd = static_cast<double>(x);
    out.ratio = out.value / (std::sqrt(xd) * (k == 2 ? std::log(xd) : 1.0));
  }
  return out;
}

double prime_log_sum(std::uint64_t x, int k, const PrimeTable& base, const SieveConfig& config) {
  check_k(k);
  check_ceiling(x, config);
  check_cover(x, base);
  const auto ys = quotients(x, k);
  const auto thetas = theta_many(ys, base, config);
  CompensatedSum sum;
  for (std::size_t i = thetas.size(); i-- > 0;) sum.add(thetas[i]);
  return sum.value();
}

namespace {

// Visits each window (lo, hi] = (x/m^k, (x+h)/m^k] with lo < hi.
template <typename Fn>
void for_each_window(std::uint64_t x, std::uint64_t h, int k, Fn&& fn) {
  const auto ku = static_cast<unsigned>(k);
  const std::uint64_t top = x + h;
  const std::uint64_t m_max = iroot(top, ku);
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    const std::uint64_t mk = *checked_pow(m, ku);
    const std::uint64_t lo = x / mk;
    const std::uint64_t hi = top / mk;
    if (lo < hi) fn(lo, hi);
  }
}

void check_interval_args(std::uint64_t x, std::uint64_t h, int k, const PrimeTable& base) {
  check_k(k);
  if (h == 0) throw DomainError("interval length h must be at least 1");
  if (x > UINT64_MAX / 2 || h > UINT64_MAX / 2) throw DomainError("interval endpoints overflow");
  check_cover(x + h, base);
}

}  // namespace

std::uint64_t count_interval(std::uint64_t x, std::uint64_t h, int k, const PrimeTable& base,
                             const SieveConfig& config) {
  check_interval_args(x, h, k, base);
  std::uint64_t count = 0;
  for_each_window(x, h, k, [&](std::uint64_t lo, std::uint64_t hi) {
    if (hi - lo <= kDirectWindow && lo >= base.limit()) {
      for (std::uint64_t n = lo + 1; n <= hi; ++n) count += is_prime(n) ? 1 : 0;
    } else {
      count += prime_count_interval(lo, hi, base, config);
    }
  });
  return count;
}

double log_sum_interval(std::uint64_t x, std::uint64_t h, int k, const PrimeTable& base, const SieveConfig& config) {
  check_interval_args(x, h, k, base);
  CompensatedSum sum;
  for_each_window(x, h, k, [&](std::uint64_t lo, std::uint64_t hi) {
    if (hi - lo <= kDirectWindow && lo >= base.limit()) {
      for (std::uint64_t n = lo + 1; n <= hi; ++n) {
        if (is_prime(n)) sum.add(std::log(static_cast<double>(n)));
      }
    } else {
      sum.add(theta_interval(lo, hi, base, config));
    }
  });
  return sum.value();
}

double weighted_lambda_sum(double x, double h, double delta, int k, const PrimeTable& base,
                           const SieveConfig& config) {
  check_k(k);
  const TrapezoidWeight w(x, h, delta);
  const auto ku = static_cast<unsigned>(k);
  const auto lo_edge = static_cast<std::uint64_t>(std::floor(x - delta));
  const auto hi_edge = static_cast<std::uint64_t>(std::floor(x + h + delta));
  check_cover(hi_edge, base);

  CompensatedSum sum;
  const std::uint64_t m_max = iroot(hi_edge, ku);
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    const std::uint64_t mk = *checked_pow(m, ku);
    const auto mkd = static_cast<double>(mk);
    const std::uint64_t lo = lo_edge / mk;
    const std::uint64_t hi = hi_edge / mk;
    if (lo >= hi) continue;
    if (hi - lo <= kDirectWindow) {
      for (std::uint64_t n = lo + 1; n <= hi; ++n) {
        if (const auto pp = is_prime_power(n)) {
          sum.add(w(static_cast<double>(n) * mkd) * std::log(static_cast<double>(pp->p)));
        }
      }
    } else {
      visit_prime_powers(lo, hi, base, config, [&](std::span<const PrimePower> batch) {
        for (const auto& e : batch) sum.add(w(static_cast<double>(e.n) * mkd) * e.log_p);
      });
    }
  }
  return sum.value();
}

double short_interval_main_term(std::uint64_t x, std::uint64_t h, int k) {
  check_k(k);
  if (x < 2) throw DomainError("short_interval_main_term: x must be at least 2");
  return zeta_int(k) * log_integral_between(static_cast<double>(x), static_cast<double>(x + h));
}

ShortIntervalReport short_interval_experiment(std::uint64_t x, double f, int k, const PrimeTable& base,
                                              const SieveConfig& config) {
  check_k(k);
  if (!(f > 1.0)) throw DomainError("short_interval_experiment: f must exceed 1");
  if (x < 16) throw DomainError("short_interval_experiment: x must be at least 16");
  const auto exps = exponents(k);
  const auto xd = static_cast<double>(x);
  const double scale = normalizer(xd, exps.A);

  ShortIntervalReport r;
  r.x = x;
  r.k = k;
  r.f = f;
  r.A = exps.A;
  r.h = static_cast<std::uint64_t>(std::llround(f * scale));
  r.delta = static_cast<std::uint64_t>(std::llround(std::sqrt(f) * scale));
  if (r.delta < 2) r.delta = 2;
  if (r.h > x) {
    throw DomainError("short_interval_experiment: h = " + std::to_string(r.h) + " exceeds x; lower f or raise x");
  }

  const double zk = zeta_int(k);
  r.count = count_interval(x, r.h, k, base, config);
  r.expected_count = short_interval_main_term(x, r.h, k);
  r.count_deviation = static_cast<double>(r.count) / r.expected_count - 1.0;
  r.log_sum = log_sum_interval(x, r.h, k, base, config);
  r.log_deviation = r.log_sum / (zk * static_cast<double>(r.h)) - 1.0;

  const auto hd = static_cast<double>(r.h);
  const auto dd = static_cast<double>(r.delta);
  r.weighted_sum = weighted_lambda_sum(xd, hd, dd, k, base, config);
  r.weighted_deviation = r.weighted_sum / (zk * (hd + dd)) - 1.0;
  r.prime_weighted_sum = s_delta_direct(TrapezoidWeight(xd, hd, dd), base, config);
  r.predicted_scale = 1.0 / std::sqrt(f);
  return r;
}

}  // namespace ppc
