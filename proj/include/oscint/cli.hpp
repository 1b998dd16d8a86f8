#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscint::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationError = 2,
  kAccuracyError = 3,
};

/// Parses args (without the program name), runs the subcommand and returns
/// the exit code. Results go to out (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace oscint::cli
