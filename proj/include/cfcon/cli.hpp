#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cfcon {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,        // success / certified
    kExitNegative = 1,  // refuted / not found
    kExitInput = 2,     // bad flags or input files
    kExitBudget = 3,    // a search or generation budget ran out
};

// Runs one CLI invocation. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfcon
