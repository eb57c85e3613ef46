#pragma once

#include <ostream>

namespace gencliff::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// The whole command line: `verify ...` or `bracket ...`. Reports and
/// bracket results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gencliff::cli
