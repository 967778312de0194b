#include "ppc/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "ppc/compensated.hpp"
#include "ppc/errors.hpp"

namespace ppc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSmallestOrdinate = 14.0;

// Explicit bound on |N(T) - rvm_estimate(T)| valid for T >= e (Trudgian's constants).
double counting_error_bound(double T) {
  const double lt = std::log(T);
  return 0.137 * lt + 0.443 * std::log(lt) + 4.350;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

void check_counting_gate(std::span<const double> ordinates) {
  // Between consecutive ordinates N is constant and the estimate is
  // increasing, so checking both sides of every jump covers every T.
  for (std::size_t i = 0; i < ordinates.size(); ++i) {
    const double g = ordinates[i];
    if (g <= kTwoPi * std::numbers::e) continue;
    const double est = rvm_estimate(g);
    const double before = static_cast<double>(i);
    const double after = static_cast<double>(i + 1);
    if (std::fabs(before - est) >= kCountingGateTolerance || std::fabs(after - est) >= kCountingGateTolerance) {
      std::ostringstream msg;
      msg << "zero table fails the counting gate at gamma = " << g << " (index " << i + 1 << ", estimate " << est
          << ")";
      throw IntegrityError(msg.str());
    }
  }
}

}  // namespace

ZeroTable::ZeroTable(std::vector<double> ordinates, std::string source_label)
    : ordinates_(std::move(ordinates)), source_label_(std::move(source_label)) {
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    if (!(ordinates_[i] > kSmallestOrdinate)) {
      throw ParseError("ordinate " + std::to_string(ordinates_[i]) + " is not above 14", 0);
    }
    if (i > 0 && !(ordinates_[i] > ordinates_[i - 1])) {
      throw ParseError("ordinates not strictly ascending at index " + std::to_string(i), 0);
    }
  }
  check_counting_gate(ordinates_);
}

double ZeroTable::max_ordinate() const {
  if (ordinates_.empty()) throw IntegrityError("zero table '" + source_label_ + "' is empty");
  return ordinates_.back();
}

ZeroTable ZeroTable::truncated(std::size_t count) const {
  ZeroTable out;
  out.source_label_ = source_label_;
  out.ordinates_.assign(ordinates_.begin(),
                        ordinates_.begin() + static_cast<std::ptrdiff_t>(std::min(count, ordinates_.size())));
  return out;
}

ZeroTable parse_zeros(std::istream& in, std::string source_label, std::optional<std::size_t> limit) {
  std::vector<double> ordinates;
  std::string line;
  std::size_t line_no = 0;
  while ((!limit || ordinates.size() < *limit) && std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw ParseError("not a decimal ordinate: '" + std::string(text) + "'", line_no);
    }
    if (!(value > kSmallestOrdinate)) throw ParseError("ordinate must exceed 14", line_no);
    if (!ordinates.empty() && !(value > ordinates.back())) {
      throw ParseError("ordinates must be strictly ascending", line_no);
    }
    ordinates.push_back(value);
  }
  return ZeroTable(std::move(ordinates), std::move(source_label));
}

ZeroTable load_zeros(const std::filesystem::path& path, std::optional<std::size_t> limit) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero table " + path.string());
  return parse_zeros(in, path.string(), limit);
}

std::size_t count_below(const ZeroTable& table, double T) {
  if (T > table.max_ordinate()) {
    throw CoverageError("N(T) requested at T = " + std::to_string(T) + " beyond table coverage " +
                        std::to_string(table.max_ordinate()));
  }
  const auto ords = table.ordinates();
  return static_cast<std::size_t>(std::lower_bound(ords.begin(), ords.end(), T) - ords.begin());
}

double rvm_estimate(double T) {
  if (!(T > 0.0)) throw DomainError("rvm_estimate: T must be positive");
  return T / kTwoPi * std::log(T / (kTwoPi * std::numbers::e)) + 0.875;
}

double sum_inv_gamma(const ZeroTable& table, double T) {
  const std::size_t n = count_below(table, T);
  const auto ords = table.ordinates();
  CompensatedSum sum;
  for (std::size_t i = n; i-- > 0;) sum.add(1.0 / ords[i]);
  return sum.value();
}

double inv_gamma_sq_tail_bound(double G) {
  if (!(G > kTwoPi * std::numbers::e)) throw DomainError("inv_gamma_sq_tail_bound: G too small");
  // sum_{gamma > G} gamma^-2 = -N(G)/G^2 + 2 int_G^inf N(t) t^-3 dt, with
  // rvm(t) - E(t) <= N(t) <= rvm(t) + E(t).
  const double G2 = G * G;
  const double lg = std::log(G);
  const double llg = std::log(lg);
  const double main_integral = (std::log(G / (kTwoPi * std::numbers::e)) + 1.0) / (kTwoPi * G) + 0.875 / (2.0 * G2);
  // int_G^inf E(t) t^-3 dt, with log log t <= log log G + (log t - log G)/log G.
  const double error_integral =
      0.137 * (2.0 * lg + 1.0) / (4.0 * G2) + 0.443 * (llg / (2.0 * G2) + 1.0 / (4.0 * G2 * lg)) + 4.350 / (2.0 * G2);
  const double lower_count = std::max(0.0, rvm_estimate(G) - counting_error_bound(G));
  return std::max(0.0, -lower_count / G2 + 2.0 * (main_integral + error_integral));
}

TailSum sum_inv_gamma_sq_tail(const ZeroTable& table, double T) {
  const double top = table.max_ordinate();
  if (T >= top) {
    throw CoverageError("1/gamma^2 tail requested at T = " + std::to_string(T) + " at or beyond table coverage " +
                        std::to_string(top));
  }
  const auto ords = table.ordinates();
  const auto first = std::upper_bound(ords.begin(), ords.end(), T);
  CompensatedSum sum;
  for (auto it = ords.end(); it != first;) {
    --it;
    sum.add(1.0 / (*it * *it));
  }
  return {sum.value(), inv_gamma_sq_tail_bound(top)};
}

}  // namespace ppc
