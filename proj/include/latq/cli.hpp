#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace latq {

// Runs one CLI invocation. Exit codes: 0 success, 2 invalid input,
// 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latq
