#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtop::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // e.g. not a dicovering, invalid complex
    kInputError = 2,
    kResourceLimit = 3,
};

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtop::cli
