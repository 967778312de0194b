#include "ppc/analytic.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ppc/compensated.hpp"
#include "ppc/errors.hpp"

namespace ppc {

namespace {

// Ei(u) = gamma + log|u| + sum_{n>=1} u^n / (n n!).
double exponential_integral_series(double u) {
  CompensatedSum sum;
  double term = 1.0;
  for (int n = 1; n < 400; ++n) {
    term *= u / n;
    const double contribution = term / n;
    sum.add(contribution);
    if (std::fabs(contribution) < 1e-17 * std::fabs(sum.value())) break;
  }
  sum.add(std::numbers::egamma);
  sum.add(std::log(std::fabs(u)));
  return sum.value();
}

// 16-point Gauss-Legendre nodes and weights on [-1, 1] (positive half).
constexpr std::array<double, 8> kNodes{
    0.0950125098376374401853193, 0.2816035507792589132304605, 0.4580167776572273863424194,
    0.6178762444026437484466718, 0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr std::array<double, 8> kWeights{
    0.1894506104550684962853967, 0.1826034150449235888667637, 0.1691565193950025381893121,
    0.1495959888165767320815017, 0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

}  // namespace

double li(double x) {
  if (!(x > 1.0)) throw DomainError("li: x must exceed 1");
  return exponential_integral_series(std::log(x));
}

double log_integral_between(double a, double b) {
  if (!(a > 1.0) || b < a) throw DomainError("log_integral_between: need 1 < a <= b");
  if (a == b) return 0.0;
  const double ua = std::log(a);
  const double ub = std::log(b);
  // Near t = 1 the integrand e^u/u blows up; fall back to the series there.
  if (ua < 0.25) return li(b) - li(a);

  // Panel widths shrink geometrically toward the singular end u -> 0.
  CompensatedSum sum;
  double lo = ua;
  while (lo < ub) {
    const double hi = std::min(ub, lo + std::min(0.5, 0.5 * lo));
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < kNodes.size(); ++i) {
      for (const double s : {-1.0, 1.0}) {
        const double u = mid + s * half * kNodes[i];
        sum.add(kWeights[i] * half * std::exp(u) / u);
      }
    }
    lo = hi;
  }
  return sum.value();
}

double zeta_int(int k) {
  if (k < 2) throw DomainError("zeta_int: k must be at least 2");
  if (k >= 64) return 1.0 + std::ldexp(1.0, -k);  // 2^-k dominates; the rest is below double resolution
  constexpr int M = 1000;
  const double dk = k;
  // Euler-Maclaurin tail for sum_{m > M} m^{-k}.
  const double Mf = M;
  const double tail = std::pow(Mf, 1.0 - dk) / (dk - 1.0) - 0.5 * std::pow(Mf, -dk) +
                      dk / 12.0 * std::pow(Mf, -dk - 1.0) -
                      dk * (dk + 1.0) * (dk + 2.0) / 720.0 * std::pow(Mf, -dk - 3.0);
  CompensatedSum sum(tail);
  for (int m = M; m >= 1; --m) sum.add(std::pow(static_cast<double>(m), -dk));
  return sum.value();
}

ErrorEnvelope::ErrorEnvelope(double c) : c_(c) {
  if (!(c > 0.0)) throw DomainError("ErrorEnvelope: c must be positive");
}

double delta_envelope(double x, const ErrorEnvelope& env) {
  if (!(x >= 16.0)) throw DomainError("delta_envelope: x must be at least 16");
  const double lx = std::log(x);
  return env.c() * std::pow(lx, 0.6) * std::pow(std::log(lx), -0.2);
}

double unconditional_error_scale(double x, const ErrorEnvelope& env) {
  return x * std::exp(-delta_envelope(x, env));
}

double ExponentTable::g_of_h(double h) const {
  if (k == 2) {
    if (!(h > 1.0)) throw DomainError("g_of_h: h must exceed 1");
    return std::log(h);
  }
  return 1.0;
}

ExponentTable exponents(int k) {
  if (k < 2) throw DomainError("exponents: k must be at least 2");
  return {k, k == 2 ? 2 : 1};
}

}  // namespace ppc
