#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strata::cli {

/// Exit statuses shared by all commands.
enum Exit : int {
    kOk = 0,
    kNegative = 1,  // eval: stk; check-proof: sequent mismatch
    kCutoff = 2,    // fuel exhausted; check-proof: inference error
    kUsage = 3,     // bad arguments, unreadable or malformed input
};

/// Runs `strata <args...>` (args exclude the program name) writing results to
/// `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace strata::cli
