#ifndef DEGEN_TOOLS_CLI_HPP
#define DEGEN_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace degen::cli
{

// Exit codes shared by every subcommand.
enum ExitCode : int
{
    kOk = 0,
    // Usage error, unknown function or identity, I/O failure, or a failed verify.
    kFailure = 1,
    kDomainError = 2,
    kNotConverged = 3,
};

// Runs one command line (without the program name). Data goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace degen::cli

#endif
