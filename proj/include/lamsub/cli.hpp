#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lamsub {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,        // provable / accepted / entailed / check passed
  kExitNegative = 1,  // not provable / rejected / not entailed / mismatches
  kExitInput = 2,     // malformed input or usage
  kExitConfig = 3,    // base logic cannot serve the request
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lamsub
