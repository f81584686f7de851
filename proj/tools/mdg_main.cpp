#include <iostream>

#include "mdg/io.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mdg::run_command(args, std::cout, std::cerr);
}
