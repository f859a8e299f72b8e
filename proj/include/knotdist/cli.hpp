#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotdist {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInvalid = 2, kExitSuiteFailure = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotdist
