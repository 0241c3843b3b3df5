#include <iostream>
#include <string>
#include <vector>

#include "extropy/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return extropy::run_cli(args, std::cout, std::cerr);
}
