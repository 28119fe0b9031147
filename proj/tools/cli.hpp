#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satk::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

/// Runs one invocation; args[0] is the program name. JSON results go to `out`, one-line JSON error
/// objects to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace satk::cli
