#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgc::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kGuard = 3,
};

/// Runs one subcommand (construct, verify-lemmas, stabilize, endo, group,
/// proof-steps, all) and writes its report to `out`. Diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgc::cli
