#pragma once

#include <complex>

#include "ppc/arith.hpp"
#include "ppc/compensated.hpp"
#include "ppc/zeros.hpp"

namespace ppc {

/// log(2 pi) = (zeta'/zeta)(0), the coefficient of the linear term.
inline constexpr double kZetaLogDerivativeAtZero = 1.8378770664093454835606594728112;
/// (zeta'/zeta)(-1) = 12 log A - 1 (A = Glaisher-Kinkelin constant), the constant term.
inline constexpr double kZetaLogDerivativeAtMinusOne = 1.9850537244054111505670359229;

/// Isosceles-trapezoid weight: 1 on [x, x+h], linear ramps of width delta
/// on both sides, zero outside (x - delta, x + h + delta).
class TrapezoidWeight {
 public:
  /// Throws DomainError unless 2 <= delta <= h <= x.
  TrapezoidWeight(double x, double h, double delta);

  double x() const noexcept { return x_; }
  double h() const noexcept { return h_; }
  double delta() const noexcept { return delta_; }

  double operator()(double n) const noexcept;

 private:
  double x_;
  double h_;
  double delta_;
};

inline double weight_eval(const TrapezoidWeight& w, double n) { return w(n); }

/// psi_1(x) = sum_{n <= x} (x - n) Lambda(n) = int_0^x psi(t) dt.
double psi1_exact(double x, const PrimeTable& base, const SieveConfig& config = {});

/// psi_1(x) accumulated in double-double; differences of these stay exact
/// to well below the weighted sums they isolate.
DoubleDouble psi1_extended(double x, const PrimeTable& base, const SieveConfig& config = {});

/// S_delta(x, h) = sum_n Lambda(n) w(n), summed directly over the support.
double s_delta_direct(const TrapezoidWeight& w, const PrimeTable& base, const SieveConfig& config = {});

/// The same sum as the second difference
/// (psi1(x+h+delta) - psi1(x+h) - psi1(x) + psi1(x-delta)) / delta.
double s_delta_via_psi1(const TrapezoidWeight& w, const PrimeTable& base, const SieveConfig& config = {});

/// ((x+h+d)^{rho+1} - (x+h)^{rho+1} - x^{rho+1} + (x-d)^{rho+1}) / (rho (rho+1))
/// for an arbitrary complex rho (rho != 0, -1).
std::complex<double> transfer_term(std::complex<double> rho, const TrapezoidWeight& w);

/// transfer_term at rho = 1/2 + i gamma. Throws DomainError for gamma == 0.
std::complex<double> s_rho(double gamma, const TrapezoidWeight& w);

struct ZeroSumResult {
  double value = 0.0;
  double remainder_bound = 0.0;  // bound on the omitted zeros beyond the table
  std::size_t zeros_used = 0;
  double truncation_ordinate = 0.0;
};

/// psi_1(x) from the explicit formula over the table's zeros (conjugates
/// paired, so the zero sum is 2 Re x^{rho+1}/(rho(rho+1)) per ordinate).
/// With include_trivial_tail the trivial zeros -2r contribute
/// -sum_{r>=1} x^{1-2r} / (2r (2r-1)). Requires x >= 2.
ZeroSumResult psi1_via_zeros(double x, const ZeroTable& table, bool include_trivial_tail = false,
                             unsigned threads = 1);

/// Three-range split of the truncated sum over rho of S(rho), with each part
/// compared against the size of its bound:
///   low  |gamma| <= x/h          vs  delta sqrt(x) log x
///   mid  x/h < |gamma| <= x/d    vs  h sqrt(x) log x
///   high x/d < |gamma| <= table  vs  delta sqrt(x) log x
/// The zeros come in conjugate pairs, so every part is real.
struct ZeroSumBreakdown {
  double low = 0.0;
  double mid = 0.0;
  double high = 0.0;
  double remainder_bound = 0.0;
  double low_ratio = 0.0;
  double mid_ratio = 0.0;
  double high_ratio = 0.0;
  std::size_t low_count = 0;
  std::size_t mid_count = 0;
  std::size_t high_count = 0;

  double total() const { return low + mid + high; }
};

/// Throws CoverageError when the table does not reach x/delta.
ZeroSumBreakdown zero_sum_breakdown(const TrapezoidWeight& w, const ZeroTable& table, unsigned threads = 1);

/// h + delta - (1/delta) sum_rho S(rho) over the table: the zero-side
/// prediction of S_delta(x, h). remainder_bound covers the zeros beyond the
/// table plus the trivial-zero terms. Requires x - delta >= 2.
ZeroSumResult s_delta_via_zeros(const TrapezoidWeight& w, const ZeroTable& table, unsigned threads = 1);

}  // namespace ppc
