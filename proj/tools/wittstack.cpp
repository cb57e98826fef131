#include <iostream>
#include <string>
#include <vector>

#include "wittstack/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return wittstack::run_cli(args, std::cout, std::cerr);
}
