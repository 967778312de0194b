#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ppc/zeros.hpp"

namespace ppc::cli {

enum class Preset { Small, Medium };

struct CheckResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  double seconds = 0.0;
};

struct VerifyOptions {
  Preset preset = Preset::Small;
  /// Restrict to these criterion numbers; empty runs every check the preset includes.
  std::set<int> only;
  unsigned threads = 1;
};

/// Numbers of the checks a preset runs. The short-interval check at
/// x = 10^12 is medium-only.
std::vector<int> preset_criteria(Preset preset);

/// Runs the acceptance checks against `zeros`. A check that throws is
/// reported as failed with the exception text as its actual value.
std::vector<CheckResult> run_checks(const VerifyOptions& options, const ZeroTable& zeros);

/// "PASS [3] name: expected ...; actual ... (1.23 s) manifest=<id>"
std::string format_check(const CheckResult& r, const std::string& manifest_id);

}  // namespace ppc::cli
