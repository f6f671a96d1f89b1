#include "msim/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return msim::cli::dispatch(argc, argv, std::cout, std::cerr);
}
