#include <iostream>
#include <string>
#include <vector>

#include "aqn/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return aqn::run_cli(args, std::cout, std::cerr);
}
