#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsft::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,      // bad flags or malformed input file
  kExitIo = 3,         // input missing / output not writable
  kExitNumerical = 4,  // overflow, quadrature non-convergence
};

/// Runs one subcommand. `args` excludes the program name. Normal output goes
/// to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsft::cli
