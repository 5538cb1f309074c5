#include <iostream>
#include <string>
#include <vector>

#include "netid/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return netid::cli::run(args, std::cout, std::cerr);
}
