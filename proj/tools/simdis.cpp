#include <iostream>
#include <vector>

#include "simdis/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return simdis::cli::run(args, std::cout, std::cerr);
}
