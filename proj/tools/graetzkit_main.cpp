#include <iostream>

#include "graetzkit/cli.hpp"

int main(int argc, char** argv) {
    return graetzkit::cli::run(argc, argv, std::cout, std::cerr);
}
