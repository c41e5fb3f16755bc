#include <iostream>
#include <vector>

#include "graphcode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return graphcode::run_cli(args, std::cout, std::cerr);
}
