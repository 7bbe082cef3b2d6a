#include <iostream>
#include <string>
#include <vector>

#include "spaceform/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spaceform::cli_run(args, std::cout, std::cerr);
}
