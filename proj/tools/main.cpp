#include <iostream>

#include "dp4a13/cli.hpp"

int main(int argc, char** argv) {
    return dp4a13::run_cli(argc, argv, std::cout, std::cerr);
}
