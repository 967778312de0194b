#pragma once

#include <cmath>

namespace ppc {

/// Neumaier's variant of Kahan summation. Unlike plain Kahan it stays
/// accurate when an addend is larger in magnitude than the running sum,
/// which happens constantly in oscillating sums over zeta zeros.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  void add(double value) {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double value) {
    add(value);
    return *this;
  }

  CompensatedSum& operator+=(const CompensatedSum& other) {
    add(other.sum_);
    add(other.compensation_);
    return *this;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Unevaluated sum hi + lo with |lo| <= ulp(hi)/2, roughly 106 bits.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  static DoubleDouble two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
  }

  static DoubleDouble two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
  }

  DoubleDouble& operator+=(const DoubleDouble& other) {
    DoubleDouble s = two_sum(hi, other.hi);
    const DoubleDouble t = two_sum(lo, other.lo);
    s.lo += t.hi;
    s = two_sum(s.hi, s.lo);
    s.lo += t.lo;
    *this = two_sum(s.hi, s.lo);
    return *this;
  }

  DoubleDouble& operator-=(const DoubleDouble& other) { return *this += DoubleDouble{-other.hi, -other.lo}; }

  friend DoubleDouble operator+(DoubleDouble a, const DoubleDouble& b) { return a += b; }
  friend DoubleDouble operator-(DoubleDouble a, const DoubleDouble& b) { return a -= b; }

  double to_double() const { return hi + lo; }
};

/// Accumulates exact products a*b in double-double. Used where a final
/// result is a small difference of very large partial sums.
class ExtendedSum {
 public:
  void add(double value) { acc_ += DoubleDouble{value, 0.0}; }
  void add_product(double a, double b) { acc_ += DoubleDouble::two_prod(a, b); }
  void add(const DoubleDouble& value) { acc_ += value; }

  const DoubleDouble& value() const { return acc_; }

 private:
  DoubleDouble acc_;
};

}  // namespace ppc
