#include <iostream>

#include "exhaustion/cli.hpp"

int main(int argc, char** argv) {
    return exhaustion::cli::run(argc, argv, std::cout, std::cerr);
}
