#ifndef QCI_TOOLS_CLI_HPP
#define QCI_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qci::cli {

enum ExitCode : int {
  kPass = 0,
  kAxiomFailure = 1,
  kPrecondition = 2,
  kUsage = 64,
};

/// Runs one subcommand; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qci::cli

#endif  // QCI_TOOLS_CLI_HPP
