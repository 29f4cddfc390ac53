#include <iostream>
#include <string>
#include <vector>

#include "convcodes_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return convcodes::cli::run(args, std::cout, std::cerr);
}
