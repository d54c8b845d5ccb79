#include <iostream>
#include <string>
#include <vector>

#include "kozmo/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kozmo::run_command(args, std::cout, std::cerr);
}
