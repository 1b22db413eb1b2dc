#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eqc {

/// Exit codes of the command-line front end.
enum ExitCode : int { kOk = 0, kValidationFailure = 1, kUsage = 2, kResourceLimit = 3 };

/// Runs one `eqc` invocation. `args` excludes the program name. Results go
/// to `out`, diagnostics to `err`; input "-" reads from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace eqc
