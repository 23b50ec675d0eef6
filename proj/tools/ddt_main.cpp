#include <iostream>
#include <vector>

#include "ddt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ddt::cli::run(args, std::cout, std::cerr);
}
