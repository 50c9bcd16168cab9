#include <iostream>
#include <vector>

#include "knotconc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return knotconc::run_cli(std::move(args), std::cout, std::cerr);
}
