#include <iostream>

#include "stablecore/cli.hpp"

int main(int argc, char** argv) { return stablecore::cli::run(argc, argv, std::cout, std::cerr); }
