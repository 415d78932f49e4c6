#ifndef EKR_CLI_HPP
#define EKR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ekr::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace ekr::cli

#endif  // EKR_CLI_HPP
