#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace piezoscan::cli {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 1,   ///< bad arguments, config or output path
  kNumericError = 2,  ///< model evaluation failed or a verify check breached its tolerance
};

/// Runs one subcommand. `args` excludes the program name. Errors go to `err`
/// prefixed with "config:", "numeric:" or "verify:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace piezoscan::cli
