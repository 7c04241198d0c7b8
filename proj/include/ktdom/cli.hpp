#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ktdom::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1, // a verifier failed, a graph was infeasible or outside a constructor's hypotheses
    kUsage = 2,   // bad flags, unreadable or unparsable input
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool out_is_terminal = false; // picks the default output format
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, Streams io);

} // namespace ktdom::cli
