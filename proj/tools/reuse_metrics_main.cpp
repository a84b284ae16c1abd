#include "reuse/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return reuse::cli::main_entry(argc, argv, std::cout, std::cerr);
}
