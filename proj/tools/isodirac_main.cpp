#include <iostream>

#include "isodirac/cli.hpp"

int main(int argc, char** argv) {
    return isodirac::run_cli(argc, argv, std::cout, std::cerr);
}
