#include <string>
#include <vector>

#include "scherk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return scherk::cli::run(args);
}
