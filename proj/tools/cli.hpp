#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trilink::cli {

enum ExitCode : int {
  ok = 0,
  parse_failure = 2,
  precondition_failure = 3,
  not_commuting = 4,
  oracle_disagreement = 5,
  invalid_sequence = 6,
};

/// Runs one invocation. args excludes the program name. Results go to `out`
/// only on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trilink::cli
