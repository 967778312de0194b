#pragma once

#include <string_view>

namespace ppc {

/// Normalization used for every main term: the principal-value integral from 0.
/// li(x) here exceeds the offset form Li(x) = integral from 2 by li(2) ~ 1.0452.
inline constexpr std::string_view kLiConvention = "principal-value li(x) = PV integral_0^x dt/log t";

/// Principal-value logarithmic integral, computed as Ei(log x) from the
/// convergent power series. Throws DomainError for x <= 1.
double li(double x);

/// Integral of dt/log t over [a, b] with 1 < a <= b. Gauss-Legendre in
/// u = log t, so short intervals far from 1 lose no digits to cancellation.
double log_integral_between(double a, double b);

/// zeta(k) for integer k >= 2: direct series plus Euler-Maclaurin tail.
double zeta_int(int k);

/// Constant of the unconditional error envelope exp(-delta(x)).
class ErrorEnvelope {
 public:
  ErrorEnvelope() = default;
  explicit ErrorEnvelope(double c);

  double c() const noexcept { return c_; }

 private:
  double c_ = 0.2;
};

/// delta(x) = c (log x)^{3/5} (log log x)^{-1/5}, defined for x >= 16.
double delta_envelope(double x, const ErrorEnvelope& env = {});

/// x exp(-delta(x)), the size of the unconditional error term.
double unconditional_error_scale(double x, const ErrorEnvelope& env = {});

/// Exponents attached to k: A(k) in the conditional error x^{1/2} log^{A(k)} x
/// and g_k(h), the size of sum_{m^k < h} m^{-k/2}.
struct ExponentTable {
  int k = 2;
  int A = 2;

  double g_of_h(double h) const;
};

ExponentTable exponents(int k);

}  // namespace ppc
