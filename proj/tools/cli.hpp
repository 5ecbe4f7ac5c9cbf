#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modcf::cli {

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_violation = 1, // period found, congruence violated, witness failed verification
    exit_usage = 2,
    exit_domain = 3,
    exit_resource = 4, // budget, span or precision ceiling
    exit_internal = 5,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace modcf::cli
