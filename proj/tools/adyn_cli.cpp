#include <iostream>
#include <string>
#include <vector>

#include "adyn/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return adyn::cli::run(args, std::cout, std::cerr);
}
