#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dc::cli::run(argc, argv, std::cout, std::cerr); }
