#pragma once

#include <iostream>

namespace sitnikov::cli {

/// Exit codes shared by every subcommand.
enum ExitCode {
    kOk = 0,
    kNegativeVerdict = 1,
    kCentralUnbalanced = 2,
    kNotCentral = 3,
    kParseError = 64,
    kDomainError = 65,
    kInternalError = 70,
};

/// Parse argv and dispatch; returns the process exit code. Streams default to
/// std::cout/std::cerr and are injectable for in-process testing.
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace sitnikov::cli
