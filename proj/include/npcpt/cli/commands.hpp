#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace npcpt::cli {

/// Stable process exit codes.
enum ExitCode : int { kSuccess = 0, kUsageError = 1, kDataError = 2, kInternalError = 3 };

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Subcommands: `detect` and `bench`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace npcpt::cli
