#pragma once

#include <ostream>

namespace eqsteenrod::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Entry point behind the `eqsteenrod` tool. Subcommands: decompose, basis,
/// tor, e2, verify. Report text goes to `out` (or --out), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eqsteenrod::cli
