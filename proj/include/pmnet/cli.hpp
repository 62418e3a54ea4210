#ifndef PMNET_CLI_HPP_
#define PMNET_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace pmnet::cli {

// Runs one invocation. `args` excludes the program name. Returns the process
// exit code: 0 on success, 1 for usage, parse, validation and failed demo
// checks, 2 for numerical-integrity failures.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pmnet::cli

#endif  // PMNET_CLI_HPP_
