#ifndef NICOM_TOOLS_CLI_HPP
#define NICOM_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nicom::cli {

/// Exit codes, stable across releases.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResourceGuard = 3,
};

/// Runs the nicom command line with argv[0] included in args.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nicom::cli

#endif  // NICOM_TOOLS_CLI_HPP
