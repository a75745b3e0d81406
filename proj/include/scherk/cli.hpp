#pragma once

#include <string>
#include <vector>

namespace scherk::cli {

// Entry point shared by the binary and the CLI tests. args[0] is the program
// name. Exit codes: 0 pass, 1 mathematical failure, 2 usage error.
int run(const std::vector<std::string>& args);

}  // namespace scherk::cli
