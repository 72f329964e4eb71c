#include <iostream>
#include <string>
#include <vector>

#include "screening/cli_io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return screening::cli_dispatch(args, std::cout, std::cerr);
}
