#include <iostream>
#include <string>
#include <vector>

#include "netsparsity/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return netsparsity::run_cli(args, std::cout, std::cerr);
}
