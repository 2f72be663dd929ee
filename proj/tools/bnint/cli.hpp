#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bnint::cli {

// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kMathException = 2,
    kMismatch = 3,
    kIrreducible = 4,
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bnint::cli
