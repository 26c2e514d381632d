#include <iostream>
#include <vector>

#include "oracles.hpp"
#include "tckit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return tckit::cli::run(args, std::cout, std::cerr, tckit::oracles::immersion_oracle);
}
