#ifndef KOZMO_CLI_HPP
#define KOZMO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kozmo {

enum ExitStatus : int {
    kExitOk = 0,
    /// Domain, input or verification failure.
    kExitFailure = 1,
    /// Bad command line.
    kExitUsage = 2,
};

/// Runs one command line (without the program name) and returns the exit status.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kozmo

#endif  // KOZMO_CLI_HPP
