#include "app.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "config.hpp"
#include "fetch.hpp"
#include "manifest.hpp"
#include "output.hpp"
#include "ppc/analytic.hpp"
#include "ppc/counting.hpp"
#include "ppc/errors.hpp"
#include "ppc/explicit_formula.hpp"
#include "ppc/zeros.hpp"
#include "verify.hpp"
#include "version.hpp"

namespace ppc::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) { return std::chrono::duration<double, std::milli>(Clock::now() - t).count(); }

std::string num(double v) { return to_text(Cell{v}); }

// Settings after merging defaults, the config file and flags.
struct Context {
  Format format = Format::Table;
  SieveConfig sieve;
  std::optional<std::string> zeros_path;  // from the config file
};

struct LoadedZeros {
  ZeroTable table;
  std::string source;
};

// --zeros, then config zeros_path, then $PPC_ZEROS_PATH, then the data
// table found at build time, then the embedded first-100 table.
LoadedZeros resolve_zeros(const std::string& flag, const Context& ctx, std::optional<std::size_t> limit) {
  std::string path = flag;
  if (path.empty() && ctx.zeros_path) path = *ctx.zeros_path;
  if (path.empty()) {
    if (const char* env = std::getenv("PPC_ZEROS_PATH"); env && *env) path = env;
  }
#ifdef PPC_DEFAULT_ZEROS_PATH
  if (path.empty() && std::filesystem::exists(PPC_DEFAULT_ZEROS_PATH)) path = PPC_DEFAULT_ZEROS_PATH;
#endif
  if (path.empty()) {
    const auto& embedded = embedded_zero_table();
    auto t = limit ? embedded.truncated(*limit) : embedded;
    return {t, embedded.source_label()};
  }
  try {
    return {load_zeros(path, limit), path};
  } catch (const ParseError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const IntegrityError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void record_zeros(RunManifest& m, const LoadedZeros& z) {
  m.zero_table_source = z.source;
  m.truncation = z.table.size();
}

// ---------------------------------------------------------------------------

struct CountArgs {
  std::string x;
  int k = 2;
  std::string method = "pair";
};

int cmd_count(const CountArgs& a, const Context& ctx, std::ostream& out) {
  const auto x = parse_count(a.x, "--x");
  auto manifest = make_manifest("count");
  manifest.parameters = {{"x", std::to_string(x)}, {"k", std::to_string(a.k)}, {"method", a.method}};
  manifest.threads = ctx.sieve.threads;

  ResultTable table{{"x", "k", "count", "main_term", "normalized_error", "A", "method"}, {}};
  auto add = [&](const CountResult& r) {
    table.add({r.x, static_cast<std::int64_t>(r.k), r.count, r.main_term ? Cell{*r.main_term} : Cell{},
               r.normalized_error ? Cell{*r.normalized_error} : Cell{}, static_cast<std::int64_t>(r.A),
               std::string(to_string(r.method))});
  };
  if (a.method == "pair" || a.method == "both") {
    const auto t = Clock::now();
    const PrimeTable base = base_table_for(std::max<std::uint64_t>(x, 4), ctx.sieve);
    add(x == 0 ? make_count_result(0, a.k, 0, CountMethod::PairEnumeration) : count_exact(x, a.k, base, ctx.sieve));
    manifest.timings_ms["pair-enumeration"] = ms_since(t);
  }
  if (a.method == "oracle" || a.method == "both") {
    const auto t = Clock::now();
    add(make_count_result(x, a.k, count_oracle(x, a.k), CountMethod::KfreeOracle));
    manifest.timings_ms["kfree-oracle"] = ms_since(t);
  }
  render(out, ctx.format, table, manifest);
  if (table.rows.size() == 2 && std::get<std::uint64_t>(table.rows[0][2]) != std::get<std::uint64_t>(table.rows[1][2])) {
    throw ValidationError("methods disagree");
  }
  return kOk;
}

struct SweepArgs {
  int k = 2;
  std::string x_min, x_max;
  int points = 10;
  std::string output;
};

int cmd_sweep(const SweepArgs& a, const Context& ctx, std::ostream& out) {
  const auto lo = parse_count(a.x_min, "--x-min");
  const auto hi = parse_count(a.x_max, "--x-max");
  if (lo < 2 || hi <= lo) throw UsageError("sweep needs 2 <= x-min < x-max");
  if (a.points < 2) throw UsageError("sweep needs --points >= 2");

  std::vector<std::uint64_t> grid;
  const double ratio = std::log(static_cast<double>(hi) / static_cast<double>(lo));
  for (int i = 0; i < a.points; ++i) {
    std::uint64_t x = i == 0 ? lo
                    : i == a.points - 1
                        ? hi
                        : static_cast<std::uint64_t>(std::llround(static_cast<double>(lo) * std::exp(ratio * i / (a.points - 1))));
    if (grid.empty() || x > grid.back()) grid.push_back(x);
  }

  auto manifest = make_manifest("sweep");
  manifest.parameters = {{"k", std::to_string(a.k)}, {"x_min", std::to_string(lo)}, {"x_max", std::to_string(hi)},
                         {"points", std::to_string(a.points)}, {"output", a.output}};
  manifest.threads = ctx.sieve.threads;

  const auto t = Clock::now();
  const PrimeTable base = base_table_for(hi, ctx.sieve);
  const auto results = count_exact_many(grid, a.k, base, ctx.sieve);
  manifest.timings_ms["count"] = ms_since(t);

  ResultTable table{{"x", "k", "count", "main_term", "error", "normalized_error"}, {}};
  double worst = 0.0;
  for (const auto& r : results) {
    table.add({r.x, static_cast<std::int64_t>(r.k), r.count, *r.main_term, static_cast<double>(r.count) - *r.main_term,
               *r.normalized_error});
    worst = std::max(worst, std::fabs(*r.normalized_error));
  }

  {
    std::ofstream file(a.output);
    if (!file) throw IoError("cannot write " + a.output);
    write_csv(file, table);
    if (!file.flush()) throw IoError("failed writing " + a.output);
  }
  const auto sidecar = write_sidecar(manifest, a.output);

  ResultTable summary{{"output", "manifest", "rows", "max_abs_normalized_error"}, {}};
  summary.add({a.output, sidecar.string(), static_cast<std::uint64_t>(table.rows.size()), worst});
  render(out, ctx.format, summary, manifest);
  return kOk;
}

struct CStarArgs {
  std::string x;
  int k = 2;
};

int cmd_cstar(const CStarArgs& a, const Context& ctx, std::ostream& out) {
  const auto x = parse_count(a.x, "--x");
  if (x == 0) throw UsageError("--x must be positive");
  auto manifest = make_manifest("cstar");
  manifest.parameters = {{"x", std::to_string(x)}, {"k", std::to_string(a.k)}};
  manifest.threads = ctx.sieve.threads;

  const auto t = Clock::now();
  const PrimeTable base = base_table_for(std::max<std::uint64_t>(x, 4), ctx.sieve);
  const auto c = cstar(x, a.k, base, ctx.sieve);
  const auto corr = prime_power_correction(x, a.k, base, ctx.sieve);
  const double logs = prime_log_sum(x, a.k, base, ctx.sieve);
  manifest.timings_ms["compute"] = ms_since(t);

  ResultTable table{{"x", "k", "cstar", "prime_log_sum", "prime_power_correction", "correction_ratio",
                     "normalized_error"},
                    {}};
  table.add({x, static_cast<std::int64_t>(a.k), c.value, logs, corr.value, corr.ratio,
             c.normalized_error ? Cell{*c.normalized_error} : Cell{}});
  render(out, ctx.format, table, manifest);
  return kOk;
}

struct ExplicitArgs {
  double x = 0.0;
  std::string zeros;
  std::optional<std::size_t> limit;
  bool tail = false;
};

int cmd_explicit(const ExplicitArgs& a, const Context& ctx, std::ostream& out) {
  auto manifest = make_manifest("explicit");
  manifest.parameters = {{"x", num(a.x)}, {"tail", a.tail ? "true" : "false"}};
  if (a.limit) manifest.parameters["limit"] = std::to_string(*a.limit);
  manifest.threads = ctx.sieve.threads;

  auto t = Clock::now();
  const auto zeros = resolve_zeros(a.zeros, ctx, a.limit);
  record_zeros(manifest, zeros);
  manifest.timings_ms["load_zeros"] = ms_since(t);

  t = Clock::now();
  if (!(a.x >= 2.0)) throw DomainError("--x must be at least 2");
  const auto top = static_cast<std::uint64_t>(a.x) + 1;
  const PrimeTable base = base_table_for(std::max<std::uint64_t>(top, 4), ctx.sieve);
  const double exact = psi1_exact(a.x, base, ctx.sieve);
  manifest.timings_ms["psi1_exact"] = ms_since(t);
  t = Clock::now();
  const auto via = psi1_via_zeros(a.x, zeros.table, a.tail, ctx.sieve.threads);
  manifest.timings_ms["psi1_via_zeros"] = ms_since(t);

  const double gap = via.value - exact;
  ResultTable table{{"x", "psi1_exact", "psi1_via_zeros", "abs_gap", "rel_gap", "remainder_bound", "zeros_used",
                     "truncation_ordinate", "trivial_tail"},
                    {}};
  table.add({a.x, exact, via.value, std::fabs(gap), std::fabs(gap) / exact, via.remainder_bound,
             static_cast<std::uint64_t>(via.zeros_used), via.truncation_ordinate, a.tail});
  render(out, ctx.format, table, manifest);
  return kOk;
}

struct IntervalArgs {
  std::string x;
  std::string h;
  std::optional<double> f;
  std::string delta;
  int k = 2;
  std::string zeros;
  bool with_zeros = false;
};

int cmd_interval(const IntervalArgs& a, const Context& ctx, std::ostream& out) {
  const auto x = parse_count(a.x, "--x");
  if (x < 16) throw UsageError("--x must be at least 16");
  if (a.h.empty() == !a.f) throw UsageError("give exactly one of --h or --f");
  auto manifest = make_manifest("interval");
  manifest.threads = ctx.sieve.threads;
  const auto xd = static_cast<double>(x);
  const int A = exponents(a.k).A;
  const double scale = std::sqrt(xd) * std::pow(std::log(xd), A);

  std::uint64_t h = 0;
  std::uint64_t delta = 0;
  if (a.f) {
    if (!(*a.f > 1.0)) throw UsageError("--f must exceed 1");
    h = static_cast<std::uint64_t>(std::llround(*a.f * scale));
    delta = std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::llround(std::sqrt(*a.f) * scale)));
    manifest.parameters["f"] = num(*a.f);
  } else {
    h = parse_count(a.h, "--h");
    // Same relation as the f-driven choice: delta = sqrt(h * x^{1/2} log^A x).
    delta = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(h) * scale)));
  }
  if (!a.delta.empty()) delta = parse_count(a.delta, "--delta");
  if (h == 0) throw UsageError("--h must be positive");
  if (h > x) throw UsageError("h = " + std::to_string(h) + " exceeds x");
  delta = std::clamp<std::uint64_t>(delta, 2, std::max<std::uint64_t>(h, 2));
  manifest.parameters["x"] = std::to_string(x);
  manifest.parameters["k"] = std::to_string(a.k);
  manifest.parameters["h"] = std::to_string(h);
  manifest.parameters["delta"] = std::to_string(delta);

  auto t = Clock::now();
  const PrimeTable base = base_table_for(x + h + delta + 1, ctx.sieve);
  const auto count = count_interval(x, h, a.k, base, ctx.sieve);
  const double expected = short_interval_main_term(x, h, a.k);
  const double log_sum = log_sum_interval(x, h, a.k, base, ctx.sieve);
  const double zk = zeta_int(a.k);
  manifest.timings_ms["interval"] = ms_since(t);

  ResultTable table{{"x", "k", "h", "delta", "A", "count", "main_term", "deviation", "log_sum", "log_deviation"}, {}};
  std::vector<Cell> row{x,
                        static_cast<std::int64_t>(a.k),
                        h,
                        delta,
                        static_cast<std::int64_t>(A),
                        count,
                        expected,
                        static_cast<double>(count) / expected - 1.0,
                        log_sum,
                        log_sum / (zk * static_cast<double>(h)) - 1.0};

  if (a.with_zeros || !a.zeros.empty()) {
    if (h < 2) throw UsageError("zero diagnostics need h >= 2");
    t = Clock::now();
    const auto zeros = resolve_zeros(a.zeros, ctx, std::nullopt);
    record_zeros(manifest, zeros);
    const TrapezoidWeight w(xd, static_cast<double>(h), static_cast<double>(delta));
    const auto br = zero_sum_breakdown(w, zeros.table, ctx.sieve.threads);
    const auto pred = s_delta_via_zeros(w, zeros.table, ctx.sieve.threads);
    const double direct = s_delta_direct(w, base, ctx.sieve);
    manifest.timings_ms["zeros"] = ms_since(t);
    for (const char* c : {"s_delta_direct", "s_delta_via_zeros", "s_delta_remainder_bound", "low", "mid", "high",
                          "low_ratio", "mid_ratio", "high_ratio", "low_count", "mid_count", "high_count",
                          "zero_remainder_bound"}) {
      table.columns.emplace_back(c);
    }
    for (Cell c : std::initializer_list<Cell>{direct, pred.value, pred.remainder_bound, br.low, br.mid, br.high,
                                              br.low_ratio, br.mid_ratio, br.high_ratio,
                                              static_cast<std::uint64_t>(br.low_count),
                                              static_cast<std::uint64_t>(br.mid_count),
                                              static_cast<std::uint64_t>(br.high_count), br.remainder_bound}) {
      row.push_back(c);
    }
  }
  table.add(std::move(row));
  render(out, ctx.format, table, manifest);
  return kOk;
}

struct ZerosStatsArgs {
  std::string zeros;
  std::optional<std::size_t> limit;
};

int cmd_zeros_stats(const ZerosStatsArgs& a, const Context& ctx, std::ostream& out) {
  auto manifest = make_manifest("zeros-stats");
  if (a.limit) manifest.parameters["limit"] = std::to_string(*a.limit);
  const auto t = Clock::now();
  const auto zeros = resolve_zeros(a.zeros, ctx, a.limit);
  record_zeros(manifest, zeros);
  manifest.timings_ms["load_zeros"] = ms_since(t);

  const double top = zeros.table.max_ordinate();
  ResultTable table{{"T", "N", "rvm_estimate", "N_minus_rvm", "sum_inv_gamma", "log2_over_4pi", "normalized_gap"}, {}};
  for (double T : {20.0, 50.0, 100.0, 200.0, 500.0, 1e3, 2e3, 5e3, 1e4, 2e4, 5e4, 1e5, 1e6}) {
    if (T > top) break;
    const auto n = count_below(zeros.table, T);
    const double rvm = T > 2 * std::numbers::pi * std::numbers::e ? rvm_estimate(T) : std::nan("");
    const double L = std::log(T);
    const double s = sum_inv_gamma(zeros.table, T);
    const double main = L * L / (4 * std::numbers::pi);
    table.add({T, static_cast<std::uint64_t>(n), rvm, static_cast<double>(n) - rvm, s, main, std::fabs(s - main) / L});
  }
  render(out, ctx.format, table, manifest);
  return kOk;
}

struct FetchArgs {
  std::string url;
  std::string output;
  std::optional<std::size_t> limit;
  int timeout = 30;
};

int cmd_fetch(const FetchArgs& a, const Context& ctx, std::ostream& out) {
  auto manifest = make_manifest("fetch-zeros");
  manifest.parameters = {{"url", a.url}, {"output", a.output}};
  if (a.limit) manifest.parameters["limit"] = std::to_string(*a.limit);
  const auto t = Clock::now();
  const auto info = fetch_zeros(a.url, a.output, a.limit, a.timeout);
  manifest.timings_ms["fetch"] = ms_since(t);
  manifest.zero_table_source = a.url;
  manifest.truncation = info.count;
  ResultTable table{{"output", "ordinates", "max_ordinate"}, {}};
  table.add({a.output, static_cast<std::uint64_t>(info.count), info.max_ordinate});
  render(out, ctx.format, table, manifest);
  return kOk;
}

struct VerifyArgs {
  std::string preset = "small";
  std::string zeros;
  std::vector<int> only;
};

int cmd_verify(const VerifyArgs& a, const Context& ctx, std::ostream& out) {
  auto manifest = make_manifest("verify");
  manifest.parameters["preset"] = a.preset;
  manifest.threads = ctx.sieve.threads;
  VerifyOptions opts;
  opts.preset = a.preset == "medium" ? Preset::Medium : Preset::Small;
  opts.only = {a.only.begin(), a.only.end()};
  opts.threads = ctx.sieve.threads;
  const auto zeros = resolve_zeros(a.zeros, ctx, std::nullopt);
  record_zeros(manifest, zeros);

  const auto t = Clock::now();
  const auto results = run_checks(opts, zeros.table);
  manifest.timings_ms["total"] = ms_since(t);
  for (const auto& r : results) manifest.timings_ms["criterion_" + std::to_string(r.criterion)] = r.seconds * 1e3;

  const std::string id = manifest.id();
  bool all = true;
  if (ctx.format == Format::Table) {
    for (const auto& r : results) out << format_check(r, id) << '\n';
  } else {
    ResultTable table{{"criterion", "name", "passed", "expected", "actual", "seconds"}, {}};
    for (const auto& r : results) {
      table.add({static_cast<std::int64_t>(r.criterion), r.name, r.passed, r.expected, r.actual, r.seconds});
    }
    render(out, ctx.format, table, manifest);
  }
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  all = failed == 0;
  if (ctx.format == Format::Table) {
    out << (all ? "all " : "") << results.size() - failed << "/" << results.size() << " checks passed, manifest "
        << id << '\n';
  }
  return all ? kOk : kValidation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting integers of the form p * m^k, with explicit-formula diagnostics", "ppc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string format = "table";
  std::string config_path;
  unsigned threads = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--config", config_path, "key = value config file");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "C_k(x) with its main term and normalized error");
  count->add_option("--x", count_args.x, "Upper limit x")->required();
  count->add_option("--k", count_args.k, "Power k")->check(CLI::Range(2, kMaxK));
  count->add_option("--method", count_args.method)->check(CLI::IsMember({"pair", "oracle", "both"}));

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Normalized error on a log-spaced grid, written as CSV");
  sweep->add_option("--k", sweep_args.k)->check(CLI::Range(2, kMaxK));
  sweep->add_option("--x-min", sweep_args.x_min)->required();
  sweep->add_option("--x-max", sweep_args.x_max)->required();
  sweep->add_option("--points", sweep_args.points);
  sweep->add_option("--output,-o", sweep_args.output)->required();

  CStarArgs cstar_args;
  auto* cstar_cmd = app.add_subcommand("cstar", "C*_k(x) and the prime-power correction");
  cstar_cmd->add_option("--x", cstar_args.x)->required();
  cstar_cmd->add_option("--k", cstar_args.k)->check(CLI::Range(2, kMaxK));

  ExplicitArgs explicit_args;
  auto* explicit_cmd = app.add_subcommand("explicit", "psi_1(x) directly and from a zero table");
  explicit_cmd->add_option("--x", explicit_args.x)->required();
  explicit_cmd->add_option("--zeros", explicit_args.zeros, "Zero table path");
  explicit_cmd->add_option("--limit", explicit_args.limit, "Use only the first N zeros");
  explicit_cmd->add_flag("--tail", explicit_args.tail, "Include the trivial-zero series");

  IntervalArgs interval_args;
  auto* interval = app.add_subcommand("interval", "C_k(x+h) - C_k(x) against its main term");
  interval->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  interval->add_option("--x", interval_args.x)->required();
  interval->add_option("--h", interval_args.h);
  interval->add_option("--f", interval_args.f, "Set h = f x^{1/2} log^A x and delta = f^{1/2} x^{1/2} log^A x");
  interval->add_option("--delta", interval_args.delta, "Ramp width for the zero diagnostics");
  interval->add_option("--k", interval_args.k)->check(CLI::Range(2, kMaxK));
  interval->add_option("--zeros", interval_args.zeros, "Zero table path; enables the S_delta diagnostics");
  interval->add_flag("--with-zeros", interval_args.with_zeros, "Enable the S_delta diagnostics with the default table");

  ZerosStatsArgs stats_args;
  auto* stats = app.add_subcommand("zeros-stats", "Counting and reciprocal-sum checks on a zero table");
  stats->add_option("--zeros", stats_args.zeros);
  stats->add_option("--limit", stats_args.limit);

  FetchArgs fetch_args;
  auto* fetch = app.add_subcommand("fetch-zeros", "Download and validate a zero table");
  fetch->add_option("--url", fetch_args.url)->required();
  fetch->add_option("--output,-o", fetch_args.output)->required();
  fetch->add_option("--limit", fetch_args.limit);
  fetch->add_option("--timeout", fetch_args.timeout, "Seconds")->check(CLI::Range(1, 3600));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_option("--preset", verify_args.preset)->check(CLI::IsMember({"small", "medium"}));
  verify->add_option("--zeros", verify_args.zeros);
  verify->add_option("--only", verify_args.only, "Criterion numbers to run")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    Context ctx;
    ctx.format = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Table;
    if (!config_path.empty()) {
      const auto file = load_config(config_path);
      if (file.sieve_ceiling) ctx.sieve.sieve_ceiling = *file.sieve_ceiling;
      if (file.segment_length) ctx.sieve.segment_length = *file.segment_length;
      if (file.threads) ctx.sieve.threads = *file.threads;
      ctx.zeros_path = file.zeros_path;
    }
    if (threads) ctx.sieve.threads = threads;
    if (ctx.sieve.segment_length < 64) throw UsageError("segment size must be at least 64");

    if (*count) return cmd_count(count_args, ctx, out);
    if (*sweep) return cmd_sweep(sweep_args, ctx, out);
    if (*cstar_cmd) return cmd_cstar(cstar_args, ctx, out);
    if (*explicit_cmd) return cmd_explicit(explicit_args, ctx, out);
    if (*interval) return cmd_interval(interval_args, ctx, out);
    if (*stats) return cmd_zeros_stats(stats_args, ctx, out);
    if (*fetch) return cmd_fetch(fetch_args, ctx, out);
    if (*verify) return cmd_verify(verify_args, ctx, out);
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const CoverageError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const NetworkError& e) {
    err << "network error: " << e.what() << '\n';
    return kNetwork;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const ParseError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const IntegrityError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace ppc::cli
