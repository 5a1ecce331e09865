#include <iostream>
#include <vector>

#include "hyperexp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hyperexp::cli::run(args, std::cout, std::cerr);
}
