// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.
//   ppc_acceptance --zeros PATH [--criteria 1,2,...] [--threads N]

#include <iostream>
#include <set>
#include <string>

#include "CLI11.hpp"
#include "manifest.hpp"
#include "ppc/zeros.hpp"
#include "verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"ppc acceptance checks"};
  std::string zeros_path;
  std::vector<int> criteria;
  unsigned threads = 1;
  app.add_option("--zeros", zeros_path)->required();
  app.add_option("--criteria", criteria)->delimiter(',');
  app.add_option("--threads", threads);
  CLI11_PARSE(app, argc, argv);

  ppc::cli::VerifyOptions opts;
  opts.preset = ppc::cli::Preset::Medium;
  opts.only = {criteria.begin(), criteria.end()};
  opts.threads = threads;

  auto manifest = ppc::cli::make_manifest("acceptance");
  manifest.zero_table_source = zeros_path;
  std::string list;
  for (int c : opts.only) list += (list.empty() ? "" : ",") + std::to_string(c);
  manifest.parameters["criteria"] = list.empty() ? "all" : list;

  ppc::ZeroTable zeros;
  try {
    zeros = ppc::load_zeros(zeros_path);
  } catch (const std::exception& e) {
    std::cout << "FAIL cannot load zero table: " << e.what() << '\n';
    return 1;
  }
  manifest.truncation = zeros.size();

  int failed = 0;
  for (const auto& r : ppc::cli::run_checks(opts, zeros)) {
    std::cout << ppc::cli::format_check(r, manifest.id()) << std::endl;
    failed += r.passed ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
