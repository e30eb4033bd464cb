#pragma once

#include <iosfwd>
#include <vector>

namespace tightpath {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

// argv[0] is the program name. Output goes to `out` (or --out), structured
// diagnostics to `err`, one JSON object per line.
int run(const std::vector<const char*>& argv, std::ostream& out, std::ostream& err);
int run(const std::vector<const char*>& argv);

}  // namespace tightpath
