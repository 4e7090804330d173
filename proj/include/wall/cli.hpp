#pragma once

#include <ostream>

namespace wall {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,    // bad input, missing files, usage errors
    kExitAuth = 2,       // credentials rejected or missing
    kExitTransport = 3,  // server unreachable or misbehaving
    kExitRevision = 4,   // at least one file Failed (outputs still written)
};

/// Entry point of the `wall` tool. Machine-readable output goes to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wall
