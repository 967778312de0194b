#pragma once

// Independent brute-force references used only by tests. Nothing here
// touches the sieve or decomposition code paths under test.

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace ppc::oracle {

inline bool trial_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::map<std::uint64_t, unsigned> factor(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

inline double lambda(std::uint64_t n) {
  if (n < 2) return 0.0;
  const auto f = factor(n);
  return f.size() == 1 ? std::log(static_cast<double>(f.begin()->first)) : 0.0;
}

inline double psi(std::uint64_t x) {
  double s = 0.0;
  for (std::uint64_t n = 2; n <= x; ++n) s += lambda(n);
  return s;
}

inline double psi1(double x) {
  long double s = 0.0L;
  for (std::uint64_t n = 2; static_cast<double>(n) <= x; ++n) s += (x - static_cast<double>(n)) * lambda(n);
  return static_cast<double>(s);
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// The set {p m^k <= x}, enumerated over pairs (p, m).
inline std::set<std::uint64_t> pm_set(std::uint64_t x, int k) {
  std::set<std::uint64_t> s;
  for (std::uint64_t m = 1; ipow(m, k) <= x; ++m) {
    const std::uint64_t mk = ipow(m, k);
    for (std::uint64_t p = 2; p * mk <= x; ++p) {
      if (trial_is_prime(p)) s.insert(p * mk);
    }
  }
  return s;
}

inline double trapezoid(double x, double h, double d, double n) {
  if (n <= x - d || n >= x + h + d) return 0.0;
  if (n < x) return (n - x + d) / d;
  if (n <= x + h) return 1.0;
  return (x + h + d - n) / d;
}

inline double s_delta(double x, double h, double d) {
  long double s = 0.0L;
  for (auto n = static_cast<std::uint64_t>(std::floor(x - d)); static_cast<double>(n) <= x + h + d; ++n) {
    s += trapezoid(x, h, d, static_cast<double>(n)) * lambda(n);
  }
  return static_cast<double>(s);
}

}  // namespace ppc::oracle
