#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidkit::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;     // nontrivial / not equal / disagreement
inline constexpr int kExitError = 2;  // usage, malformed input, budget

/// Runs the `braid` command line; args excludes the program name. Words are
/// read from `in`, one per line, when none are given on the command line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace braidkit::cli
