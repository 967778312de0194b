#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kCapacity = 3,
  kIo = 4,
  kNetwork = 5,
  kValidation = 6,
};

/// Runs the ppc command line. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppc::cli
