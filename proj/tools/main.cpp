#include <iostream>

#include "rstirling/cli.hpp"

int main(int argc, char** argv) {
    return rstirling::run_cli(argc, argv, std::cout, std::cerr);
}
