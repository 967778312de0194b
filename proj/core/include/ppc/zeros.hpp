#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ppc {

/// Ascending positive ordinates gamma of nontrivial zeta zeros. Every
/// consumer assumes RH (rho = 1/2 + i gamma), so all explicit-formula
/// outputs built on a ZeroTable are conditional on it.
class ZeroTable {
 public:
  ZeroTable() = default;

  /// Validates ordering, the lower bound gamma > 14, and the counting gate.
  /// Throws ParseError (line 0) on ordering problems, IntegrityError on the gate.
  ZeroTable(std::vector<double> ordinates, std::string source_label);

  std::span<const double> ordinates() const noexcept { return ordinates_; }
  std::size_t size() const noexcept { return ordinates_.size(); }
  bool empty() const noexcept { return ordinates_.empty(); }
  const std::string& source_label() const noexcept { return source_label_; }

  /// Largest ordinate. Throws IntegrityError on an empty table.
  double max_ordinate() const;

  /// The first `count` ordinates (all of them if count >= size()).
  ZeroTable truncated(std::size_t count) const;

 private:
  std::vector<double> ordinates_;
  std::string source_label_;
};

/// Largest |N(T) - rvm_estimate(T)| tolerated by the load-time gate.
inline constexpr double kCountingGateTolerance = 2.0;

/// Parses one ordinate per line; blank lines and lines starting with '#'
/// are skipped. Keeps at most `limit` ordinates. Throws ParseError with the
/// 1-based line number on non-numeric or non-ascending input.
ZeroTable parse_zeros(std::istream& in, std::string source_label, std::optional<std::size_t> limit = std::nullopt);

ZeroTable load_zeros(const std::filesystem::path& path, std::optional<std::size_t> limit = std::nullopt);

/// First 100 ordinates, compiled into the library.
const ZeroTable& embedded_zero_table();

/// N(T) = #{gamma in table : 0 < gamma < T}. Throws CoverageError for T > max ordinate.
std::size_t count_below(const ZeroTable& table, double T);

/// Riemann-von Mangoldt main term (T/2pi) log(T/(2pi e)) + 7/8.
double rvm_estimate(double T);

/// Sum of 1/gamma over table ordinates below T.
double sum_inv_gamma(const ZeroTable& table, double T);

struct TailSum {
  double in_table = 0.0;          // sum of 1/gamma^2 over T < gamma <= max ordinate
  double remainder_bound = 0.0;   // upper bound for gamma > max ordinate
};

/// Sum of 1/gamma^2 over gamma > T, split at the table's coverage.
TailSum sum_inv_gamma_sq_tail(const ZeroTable& table, double T);

/// Upper bound on sum_{gamma > G} 1/gamma^2 over all zeros, from an explicit
/// bound on |N(t) - rvm_estimate(t)|.
double inv_gamma_sq_tail_bound(double G);

}  // namespace ppc
