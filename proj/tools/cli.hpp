#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nacalg::cli {

enum ExitCode : int { Ok = 0, AxiomFailure = 1, InputError = 2, PreconditionFailure = 3 };

/// Runs one command line (args excludes the program name) and returns the
/// exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nacalg::cli
