#include <iostream>
#include <string>
#include <vector>

#include "logconcave/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return logconcave::cli_main(args, std::cout, std::cerr);
}
