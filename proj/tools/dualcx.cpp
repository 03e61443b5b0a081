#include <iostream>
#include <string>
#include <vector>

#include "dualcx/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dualcx::run_cli(args, std::cout, std::cerr);
}
