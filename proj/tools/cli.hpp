#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace domstab {

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitUsageError = 2,
    kExitOracleMismatch = 3,
};

/// Entry point of the domstab command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace domstab
