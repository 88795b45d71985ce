#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grundy::cli {

enum ExitCode : int {
    kOk = 0,
    kRejected = 1,  // domain rejection: non-Cameron input, size limit, failed selftest
    kUsage = 2,     // unknown subcommand or flag, unreadable or malformed input
    kInternal = 3,  // an internal consistency check failed
};

/// Runs one subcommand. `args` excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grundy::cli
