#include <iostream>
#include <string>
#include <vector>

#include "mfp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mfp::run_cli(args, std::cout, std::cerr);
}
