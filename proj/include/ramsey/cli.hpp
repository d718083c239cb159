#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey {

enum ExitCode { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

// args excludes the program name. Results go to out, diagnostics to err.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey
