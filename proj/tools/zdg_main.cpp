#include <iostream>

#include "zdg/cli.hpp"

int main(int argc, char** argv) { return zdg::cli::main(argc, argv, std::cout, std::cerr); }
