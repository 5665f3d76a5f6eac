#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace z2mem {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConvergence = 2,
  kExitCapability = 3,
  kExitCheckFailed = 4,
};

/// Runs the z2mem command line. `args` excludes the program name. CSV and
/// reports go to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z2mem
