#pragma once

#include <iosfwd>

namespace ccsym {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNumerical = 2,  // invariance, clustering, convergence, or a failed verify
  kExitInput = 3,
  kExitIo = 4,
};

/// Subcommands: spectrum | stability | scan | verify. Reports go to `out`
/// (or --out), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccsym
