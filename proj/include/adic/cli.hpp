#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adic {

// Runs one CLI invocation. Exit codes: 0 success / verification pass,
// 1 verification failure or computation error, 2 usage or parse error.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace adic
