#include <iostream>

#include "primeul/cli/cli.hpp"

int main(int argc, char** argv) { return primeul::cli::run(argc, argv, std::cout, std::cerr); }
