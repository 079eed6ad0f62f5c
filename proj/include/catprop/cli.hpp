#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace catprop {

/// Exit codes of the command-line driver.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs the command-line interface. `args` excludes the program name.
/// `color` enables ANSI colors in text reports.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool color = false);

}  // namespace catprop
