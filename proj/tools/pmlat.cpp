#include <iostream>

#include "pml/cli.hpp"

int main(int argc, char** argv) { return pml::cli::run(argc, argv, std::cout, std::cerr); }
