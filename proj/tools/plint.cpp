#include <iostream>

#include "plint/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return plint::run_cli(args, std::cout, std::cerr);
}
