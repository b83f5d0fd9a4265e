#include <iostream>
#include <string>
#include <vector>

#include "jonestwist/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return jt::cli::run(std::move(args), std::cout, std::cerr);
}
