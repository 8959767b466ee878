#include <iostream>
#include <string>
#include <vector>

#include "qwalk/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return qwalk::cli::run(args, std::cout, std::cerr);
}
