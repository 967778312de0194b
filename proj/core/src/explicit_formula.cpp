#include "ppc/explicit_formula.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ppc/errors.hpp"
#include "ppc/parallel.hpp"

namespace ppc {

namespace {

using cplx = std::complex<double>;

// Ordinates per work chunk. Fixed so the summation order does not depend
// on the thread count.
constexpr std::size_t kZeroChunk = 512;

cplx expm1(cplx z) {
  const double a = z.real();
  const double b = z.imag();
  const double s = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

// t^{rho+1} / x^{rho+1} - 1 for t > 0, via log1p so t near x keeps its digits.
cplx relative_power_m1(cplx rho_plus_one, double t, double x) {
  if (t == 0.0) return {-1.0, 0.0};
  return expm1(rho_plus_one * std::log1p((t - x) / x));
}

// sum_{r >= 1} y^{1-2r} / (2r (2r-1)), the trivial-zero part of psi_1 (with sign -).
double trivial_zero_series(double y) {
  CompensatedSum sum;
  const double inv_y2 = 1.0 / (y * y);
  double power = 1.0 / y;
  for (int r = 1; r < 200; ++r) {
    const double term = power / (2.0 * r * (2.0 * r - 1.0));
    sum.add(term);
    if (term < 1e-18 * sum.value()) break;
    power *= inv_y2;
  }
  return sum.value();
}

// Evaluates psi_1 at several points in one pass over the prime powers.
std::vector<DoubleDouble> psi1_multi(std::span<const double> ys, const PrimeTable& base, const SieveConfig& config) {
  std::vector<ExtendedSum> acc(ys.size());
  double top = 0.0;
  for (const double y : ys) {
    if (!(y >= 0.0)) throw DomainError("psi1: argument must be non-negative");
    top = std::max(top, y);
  }
  const auto hi = static_cast<std::uint64_t>(std::floor(top));
  if (hi >= 2) {
    visit_prime_powers(0, hi, base, config, [&](std::span<const PrimePower> batch) {
      for (const auto& e : batch) {
        const auto n = static_cast<double>(e.n);
        for (std::size_t i = 0; i < ys.size(); ++i) {
          if (n <= ys[i]) acc[i].add_product(ys[i] - n, e.log_p);
        }
      }
    });
  }
  std::vector<DoubleDouble> out;
  out.reserve(acc.size());
  for (const auto& a : acc) out.push_back(a.value());
  return out;
}

// Chunk-parallel compensated sum of fn(gamma) over ordinates [first, last),
// each chunk summed from its largest ordinate down, chunks merged from the top.
template <typename Fn>
CompensatedSum sum_over_ordinates(std::span<const double> ords, unsigned threads, Fn&& fn) {
  const std::size_t chunks = (ords.size() + kZeroChunk - 1) / kZeroChunk;
  const auto partial = parallel_indexed(chunks, threads, [&](std::size_t c) {
    const std::size_t begin = c * kZeroChunk;
    const std::size_t end = std::min(ords.size(), begin + kZeroChunk);
    CompensatedSum s;
    for (std::size_t i = end; i-- > begin;) s.add(fn(ords[i]));
    return s;
  });
  CompensatedSum total;
  for (std::size_t c = chunks; c-- > 0;) total += partial[c];
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------

TrapezoidWeight::TrapezoidWeight(double x, double h, double delta) : x_(x), h_(h), delta_(delta) {
  if (!(2.0 <= delta && delta <= h && h <= x)) {
    throw DomainError("trapezoid weight needs 2 <= delta <= h <= x (got x=" + std::to_string(x) +
                      ", h=" + std::to_string(h) + ", delta=" + std::to_string(delta) + ")");
  }
}

double TrapezoidWeight::operator()(double n) const noexcept {
  if (n <= x_ - delta_ || n >= x_ + h_ + delta_) return 0.0;
  if (n < x_) return (n - x_ + delta_) / delta_;
  if (n <= x_ + h_) return 1.0;
  return (x_ + h_ + delta_ - n) / delta_;
}

DoubleDouble psi1_extended(double x, const PrimeTable& base, const SieveConfig& config) {
  const std::array<double, 1> ys{x};
  return psi1_multi(ys, base, config).front();
}

double psi1_exact(double x, const PrimeTable& base, const SieveConfig& config) {
  if (!(x >= 1.0)) throw DomainError("psi1_exact: x must be at least 1");
  return psi1_extended(x, base, config).to_double();
}

double s_delta_direct(const TrapezoidWeight& w, const PrimeTable& base, const SieveConfig& config) {
  const auto lo = static_cast<std::uint64_t>(std::floor(w.x() - w.delta()));
  const auto hi = static_cast<std::uint64_t>(std::floor(w.x() + w.h() + w.delta()));
  CompensatedSum sum;
  visit_prime_powers(lo, hi, base, config, [&](std::span<const PrimePower> batch) {
    for (const auto& e : batch) sum.add(w(static_cast<double>(e.n)) * e.log_p);
  });
  return sum.value();
}

double s_delta_via_psi1(const TrapezoidWeight& w, const PrimeTable& base, const SieveConfig& config) {
  const double x = w.x();
  const double h = w.h();
  const double d = w.delta();
  const std::array<double, 4> ys{x + h + d, x + h, x, x - d};
  const auto v = psi1_multi(ys, base, config);
  const DoubleDouble second_difference = v[0] - v[1] - v[2] + v[3];
  return second_difference.to_double() / d;
}

std::complex<double> transfer_term(std::complex<double> rho, const TrapezoidWeight& w) {
  if (rho == cplx{0.0, 0.0} || rho == cplx{-1.0, 0.0}) throw DomainError("transfer_term: rho must not be 0 or -1");
  const double x = w.x();
  const double h = w.h();
  const double d = w.delta();
  const cplx s = rho + 1.0;
  const cplx scale = std::exp(s * std::log(x));
  const cplx bracket =
      relative_power_m1(s, x + h + d, x) - relative_power_m1(s, x + h, x) + relative_power_m1(s, x - d, x);
  return scale * bracket / (rho * s);
}

std::complex<double> s_rho(double gamma, const TrapezoidWeight& w) {
  if (gamma == 0.0) throw DomainError("s_rho: gamma must be nonzero");
  return transfer_term({0.5, gamma}, w);
}

ZeroSumResult psi1_via_zeros(double x, const ZeroTable& table, bool include_trivial_tail, unsigned threads) {
  if (!(x >= 2.0)) throw DomainError("psi1_via_zeros: x must be at least 2");
  const double top = table.max_ordinate();

  const double log_x = std::log(x);
  const auto zero_sum = sum_over_ordinates(table.ordinates(), threads, [&](double gamma) {
    const cplx rho{0.5, gamma};
    const cplx term = std::exp((rho + 1.0) * log_x) / (rho * (rho + 1.0));
    return 2.0 * term.real();
  });

  CompensatedSum value;
  value.add(0.5 * x * x);
  value.add(-zero_sum.value());
  value.add(-kZetaLogDerivativeAtZero * x);
  value.add(kZetaLogDerivativeAtMinusOne);

  const double trivial = trivial_zero_series(x);
  double bound = 2.0 * std::pow(x, 1.5) * inv_gamma_sq_tail_bound(top);
  if (include_trivial_tail) {
    value.add(-trivial);
  } else {
    bound += trivial;
  }
  return {value.value(), bound, table.size(), top};
}

ZeroSumBreakdown zero_sum_breakdown(const TrapezoidWeight& w, const ZeroTable& table, unsigned threads) {
  const double x = w.x();
  const double h = w.h();
  const double d = w.delta();
  const double top = table.max_ordinate();
  if (x / d > top) {
    throw CoverageError("zero table reaches gamma = " + std::to_string(top) + " but the split needs x/delta = " +
                        std::to_string(x / d));
  }
  const double low_edge = x / h;
  const double mid_edge = x / d;
  const auto ords = table.ordinates();
  const auto low_end = static_cast<std::size_t>(std::upper_bound(ords.begin(), ords.end(), low_edge) - ords.begin());
  const auto mid_end = static_cast<std::size_t>(std::upper_bound(ords.begin(), ords.end(), mid_edge) - ords.begin());

  auto pair_term = [&](double gamma) { return 2.0 * s_rho(gamma, w).real(); };
  ZeroSumBreakdown out;
  out.low = sum_over_ordinates(ords.subspan(0, low_end), threads, pair_term).value();
  out.mid = sum_over_ordinates(ords.subspan(low_end, mid_end - low_end), threads, pair_term).value();
  out.high = sum_over_ordinates(ords.subspan(mid_end), threads, pair_term).value();
  out.low_count = low_end;
  out.mid_count = mid_end - low_end;
  out.high_count = ords.size() - mid_end;
  out.remainder_bound = 8.0 * std::pow(x + h + d, 1.5) * inv_gamma_sq_tail_bound(top);

  const double scale = std::sqrt(x) * std::log(x);
  out.low_ratio = std::fabs(out.low) / (d * scale);
  out.mid_ratio = std::fabs(out.mid) / (h * scale);
  out.high_ratio = std::fabs(out.high) / (d * scale);
  return out;
}

ZeroSumResult s_delta_via_zeros(const TrapezoidWeight& w, const ZeroTable& table, unsigned threads) {
  const double x = w.x();
  const double h = w.h();
  const double d = w.delta();
  if (!(x - d >= 2.0)) throw DomainError("s_delta_via_zeros: need x - delta >= 2");
  const double top = table.max_ordinate();

  const auto zero_sum =
      sum_over_ordinates(table.ordinates(), threads, [&](double gamma) { return 2.0 * s_rho(gamma, w).real(); });

  const double trivial = trivial_zero_series(x + h + d) + trivial_zero_series(x + h) + trivial_zero_series(x) +
                         trivial_zero_series(x - d);
  const double bound = (8.0 * std::pow(x + h + d, 1.5) * inv_gamma_sq_tail_bound(top) + trivial) / d;
  return {h + d - zero_sum.value() / d, bound, table.size(), top};
}

}  // namespace ppc
