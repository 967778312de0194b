#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "ppc/analytic.hpp"
#include "ppc/counting.hpp"
#include "ppc/errors.hpp"
#include "ppc/explicit_formula.hpp"

namespace ppc::cli {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string g(double v) { return fmt("%.6g", v); }

struct Outcome {
  bool passed;
  std::string expected;
  std::string actual;
};

// 1. count_exact against the k-free decomposition oracle.
Outcome oracle_equivalence(const SieveConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const PrimeTable base = base_table_for(1'000'000, cfg);
  std::vector<std::uint64_t> xs(10'000);
  for (std::uint64_t i = 0; i < xs.size(); ++i) xs[i] = i + 1;
  std::size_t mismatches = 0;
  std::string first;
  for (int k = 2; k <= 5; ++k) {
    const auto prefix = count_oracle_prefix(10'000, k);
    const auto exact = count_exact_many(xs, k, base, cfg);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (exact[i].count != prefix[xs[i]]) {
        if (mismatches++ == 0) first = "x=" + std::to_string(xs[i]) + " k=" + std::to_string(k);
      }
    }
  }
  for (int k : {2, 3}) {
    for (std::uint64_t x : {100'000ULL, 1'000'000ULL}) {
      if (count_exact(x, k, base, cfg).count != count_oracle(x, k)) {
        if (mismatches++ == 0) first = "x=" + std::to_string(x) + " k=" + std::to_string(k);
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = mismatches == 0 && secs < 30.0;
  return {ok, "0 mismatches over 40004 cases, < 30 s",
          std::to_string(mismatches) + " mismatches" + (first.empty() ? "" : " (first " + first + ")") + ", " +
              fmt("%.2f s", secs)};
}

// 2. Small values against frozen brute-force sums.
Outcome known_values(const SieveConfig& cfg) {
  const PrimeTable base = sieve_primes(1000, cfg);
  struct Case {
    const char* label;
    double got;
    double want;
  };
  const Case cases[] = {
      {"C_2(10)", static_cast<double>(count_exact(10, 2, base, cfg).count), 5.0},
      {"C_2(100)", static_cast<double>(count_exact(100, 2, base, cfg).count), 46.0},
      {"C_3(10)", static_cast<double>(count_exact(10, 3, base, cfg).count), 4.0},
      {"psi(10)", psi(10, base, cfg), 7.832014180505},
      {"psi1(10)", psi1_exact(10.0, base, cfg), 33.764173207640},
  };
  bool ok = true;
  std::string expected, actual;
  for (const auto& c : cases) {
    ok = ok && std::fabs(c.got - c.want) <= 1e-6;
    expected += std::string(expected.empty() ? "" : ", ") + c.label + "=" + fmt("%.12g", c.want);
    actual += std::string(actual.empty() ? "" : ", ") + c.label + "=" + fmt("%.12g", c.got);
  }
  return {ok, expected + " (abs 1e-6)", actual};
}

// 3. Direct trapezoid sum vs the psi_1 second difference.
Outcome trapezoid_identity(const SieveConfig& cfg) {
  const PrimeTable base = base_table_for(3'000'000, cfg);
  std::mt19937_64 rng(20240101);
  std::uniform_real_distribution<double> logx(std::log(2.0), std::log(1e6));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  int done = 0;
  while (done < 50) {
    const double x = std::exp(logx(rng));
    if (x < 2.0) continue;
    const double h = 2.0 + (x - 2.0) * std::pow(unit(rng), 2);
    const double d = 2.0 + (h - 2.0) * unit(rng);
    const TrapezoidWeight w(x, h, d);
    const double direct = s_delta_direct(w, base, cfg);
    const double via = s_delta_via_psi1(w, base, cfg);
    const double rel = direct == 0.0 ? std::fabs(via) : std::fabs(via - direct) / std::fabs(direct);
    worst = std::max(worst, rel);
    ++done;
  }
  return {worst <= 1e-8, "max relative gap <= 1e-8 on 50 triples", "max relative gap " + g(worst)};
}

// 4. psi_1 from the zeros vs the direct sum.
Outcome explicit_formula_consistency(const ZeroTable& zeros, unsigned threads, const SieveConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (zeros.size() < 10'000) {
    throw CoverageError("needs 10^4 zeros, table '" + zeros.source_label() + "' has " +
                        std::to_string(zeros.size()));
  }
  const PrimeTable base = sieve_primes(200, cfg);
  const ZeroTable first = zeros.truncated(10'000);
  const double exact = psi1_exact(1e4, base, cfg);
  const double rel = std::fabs(psi1_via_zeros(1e4, first, false, threads).value - exact) / exact;

  // Mean absolute gap over 20 points of [10^3, 10^4] along a truncation ladder.
  const std::size_t ladder[] = {10, 30, 100, 300, 1000, 3000, 10'000};
  std::vector<double> mean_gap;
  for (const auto n : ladder) {
    const ZeroTable t = zeros.truncated(n);
    double total = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double x = 1e3 * std::pow(10.0, i / 19.0) + 0.5;
      total += std::fabs(psi1_via_zeros(x, t, false, threads).value - psi1_exact(x, base, cfg));
    }
    mean_gap.push_back(total / 20);
  }
  bool monotone = true;
  for (std::size_t i = 1; i < mean_gap.size(); ++i) monotone = monotone && mean_gap[i] < mean_gap[i - 1];
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string ladder_text;
  for (std::size_t i = 0; i < mean_gap.size(); ++i) {
    ladder_text += (i ? " > " : "") + std::to_string(ladder[i]) + ":" + g(mean_gap[i]);
  }
  return {rel < 1e-3 && monotone && secs < 10.0,
          "relative gap at 10^4 < 1e-3, mean gap decreasing over 10..10^4 zeros, < 10 s",
          "relative gap " + g(rel) + "; mean gaps " + ladder_text + (monotone ? "" : " (not monotone)") + "; " +
              fmt("%.2f s", secs)};
}

// 5. Counting gates on the zero table.
Outcome zero_table_gates(const ZeroTable& zeros) {
  bool ok = true;
  double worst_n = 0.0, worst_s = 0.0;
  for (double T : {50.0, 100.0, 500.0, 1e3, 5e3}) {
    const double gap = std::fabs(static_cast<double>(count_below(zeros, T)) - rvm_estimate(T));
    worst_n = std::max(worst_n, gap);
    ok = ok && gap < 2.0;
  }
  for (double T : {1e2, 1e3, 1e4}) {
    const double L = std::log(T);
    const double r = std::fabs(sum_inv_gamma(zeros, T) - L * L / (4 * std::numbers::pi)) / L;
    worst_s = std::max(worst_s, r);
    ok = ok && r <= 2.0;
  }
  return {ok, "max |N - RvM| < 2; max |sum 1/gamma - log^2 T/4pi| / log T <= 2",
          "max |N - RvM| = " + g(worst_n) + "; max normalized 1/gamma gap = " + g(worst_s)};
}

// 6. Three-range split at (10^5, 10^3, 10^2).
Outcome three_range(const ZeroTable& zeros, unsigned threads) {
  const auto br = zero_sum_breakdown(TrapezoidWeight(1e5, 1e3, 1e2), zeros, threads);
  const bool ok = br.low_ratio <= 10 && br.mid_ratio <= 10 && br.high_ratio <= 10;
  return {ok, "each ratio <= 10",
          "low " + g(br.low_ratio) + " (" + std::to_string(br.low_count) + " zeros), mid " + g(br.mid_ratio) + " (" +
              std::to_string(br.mid_count) + "), high " + g(br.high_ratio) + " (" + std::to_string(br.high_count) +
              ")"};
}

// 7. Normalized error on a log grid.
Outcome normalized_error(const SieveConfig& cfg) {
  const PrimeTable base = base_table_for(100'000'000, cfg);
  std::vector<std::uint64_t> grid;
  for (int i = 0; i < 20; ++i) grid.push_back(static_cast<std::uint64_t>(std::llround(std::pow(10.0, 3.0 + 5.0 * i / 19))));
  std::string actual;
  bool ok = true;
  for (int k : {2, 3}) {
    double worst = 0.0;
    std::uint64_t at = 0;
    for (const auto& r : count_exact_many(grid, k, base, cfg)) {
      const double e = std::fabs(*r.normalized_error);
      if (e > worst) {
        worst = e;
        at = r.x;
      }
    }
    ok = ok && worst <= 3.0;
    actual += std::string(actual.empty() ? "" : "; ") + "k=" + std::to_string(k) + " max |e| " + g(worst) +
              " at x=" + std::to_string(at);
  }
  return {ok, "max |e_k| <= 3 on 20 points of [10^3, 10^8], k = 2, 3", actual};
}

// 8. Short interval at x = 10^12.
Outcome short_interval(const SieveConfig& cfg) {
  const std::uint64_t x = 1'000'000'000'000ULL, h = 100'000'000ULL;
  const auto start = std::chrono::steady_clock::now();
  const PrimeTable base = base_table_for(x + h, cfg);
  const auto count = count_interval(x, h, 2, base, cfg);
  const double expected = short_interval_main_term(x, h, 2);
  const double dev = static_cast<double>(count) / expected - 1.0;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::fabs(dev) < 0.01 && secs < 300, "|count / main term - 1| < 0.01, < 300 s",
          "count " + std::to_string(count) + ", main term " + fmt("%.1f", expected) + ", deviation " + g(dev) + ", " +
              fmt("%.1f s", secs)};
}

// 9. C*_k minus the prime-power correction equals sum of log p, for every x <= 10^4.
Outcome cstar_identity(const SieveConfig& cfg) {
  const PrimeTable base = sieve_primes(10'000, cfg);
  double worst = 0.0;
  for (int k : {2, 3}) {
    for (std::uint64_t x = 1; x <= 10'000; ++x) {
      // Independent enumeration over pairs (p, m).
      double want = 0.0;
      for (std::uint64_t m = 1;; ++m) {
        const auto mk = checked_pow(m, static_cast<unsigned>(k));
        if (!mk || *mk > x) break;
        const auto y = x / *mk;
        for (std::size_t i = 0; i < base.size() && base.primes()[i] <= y; ++i) want += base.logs()[i];
      }
      const double got = cstar(x, k, base, cfg).value - prime_power_correction(x, k, base, cfg).value;
      const double rel = want == 0.0 ? std::fabs(got) : std::fabs(got - want) / want;
      worst = std::max(worst, rel);
    }
  }
  return {worst <= 1e-9, "relative gap <= 1e-9 for all x <= 10^4, k = 2, 3", "max relative gap " + g(worst)};
}

}  // namespace

std::vector<int> preset_criteria(Preset preset) {
  if (preset == Preset::Small) return {1, 2, 3, 4, 5, 6, 7, 9};
  return {1, 2, 3, 4, 5, 6, 7, 8, 9};
}

std::vector<CheckResult> run_checks(const VerifyOptions& options, const ZeroTable& zeros) {
  SieveConfig cfg;
  cfg.threads = options.threads;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"oracle equivalence", [&] { return oracle_equivalence(cfg); }},
      {"known values", [&] { return known_values(cfg); }},
      {"trapezoid identity", [&] { return trapezoid_identity(cfg); }},
      {"explicit formula self-consistency", [&] { return explicit_formula_consistency(zeros, options.threads, cfg); }},
      {"zero table gates", [&] { return zero_table_gates(zeros); }},
      {"three-range bounds", [&] { return three_range(zeros, options.threads); }},
      {"normalized error envelope", [&] { return normalized_error(cfg); }},
      {"short interval at 10^12", [&] { return short_interval(cfg); }},
      {"C* identity", [&] { return cstar_identity(cfg); }},
  };
  std::vector<CheckResult> out;
  for (const int n : preset_criteria(options.preset)) {
    if (!options.only.empty() && !options.only.count(n)) continue;
    const auto& [name, fn] = checks[static_cast<std::size_t>(n - 1)];
    CheckResult r;
    r.criterion = n;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto o = fn();
      r.passed = o.passed;
      r.expected = o.expected;
      r.actual = o.actual;
    } catch (const std::exception& e) {
      r.passed = false;
      r.expected = "check completes";
      r.actual = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_check(const CheckResult& r, const std::string& manifest_id) {
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.criterion) + "] " + r.name +
         ": expected " + r.expected + "; actual " + r.actual + " (" + fmt("%.2f", r.seconds) + " s) manifest=" +
         manifest_id;
}

}  // namespace ppc::cli
