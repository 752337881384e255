#include <iostream>
#include <vector>

#include "rainbow/harness.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rainbow::cli_dispatch(args, std::cout, std::cerr);
}
