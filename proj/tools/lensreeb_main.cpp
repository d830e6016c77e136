#include <iostream>

#include "lensreeb/cli.hpp"

int main(int argc, char** argv) { return lensreeb::cli::run(argc, argv, std::cout, std::cerr); }
