#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rncdr {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 negative verdict, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rncdr
