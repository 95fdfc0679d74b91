#include <iostream>
#include <string>
#include <vector>

#include "hrbound/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return hrb::run_cli(args, std::cout, std::cerr);
}
