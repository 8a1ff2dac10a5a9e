#ifndef NOETHER_COMMANDS_HPP
#define NOETHER_COMMANDS_HPP

#include <string>
#include <vector>

namespace noether {

// Exit codes: 0 mathematical success, 1 mathematical negative (non-member,
// infeasible solve, failed verification), 2 usage or input error,
// 3 resource bound exceeded, 4 internal error.
struct RunResult {
  std::string report_json;  // empty for --help
  int exit_code = 0;
  std::string out_path;     // from --out, written by the caller
  std::string diagnostics;  // stderr channel
};

// args exclude the program name: {"gb", "--session", "demo.json", ...}.
RunResult run_subcommand(const std::vector<std::string>& args);

}  // namespace noether

#endif
