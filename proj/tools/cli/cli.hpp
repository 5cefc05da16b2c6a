#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace axelsmote::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kDataError = 3,
    kStratificationError = 4,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics and logs to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace axelsmote::cli
