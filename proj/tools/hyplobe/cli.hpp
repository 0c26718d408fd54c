#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyplobe::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitBadInput = 2,
  kExitNotConverged = 3,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Reports go to `out` unless --output names a file;
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyplobe::cli
