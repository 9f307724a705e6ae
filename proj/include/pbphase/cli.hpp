#ifndef PBPHASE_CLI_HPP
#define PBPHASE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pbphase::cli {

enum ExitCode : int
{
    kSuccess = 0,
    kUsage = 1,
    kDomain = 2,
    kCheckFailed = 3,
};

/// Runs one command line (without the program name); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pbphase::cli

#endif // PBPHASE_CLI_HPP
