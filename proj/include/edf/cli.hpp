#pragma once

#include <ostream>
#include <span>
#include <string>

namespace edf::cli {

enum ExitCode : int {
    ok = 0,
    negative = 1,    // verification failed, search exhausted without solutions, NONE
    usage = 2,       // bad arguments or unparsable input
    unsupported = 3, // parameters outside what the library handles
};

/// Runs edftool with args (args[0] is the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace edf::cli
