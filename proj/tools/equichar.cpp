#include <iostream>

#include "equichar/cli.hpp"

int main(int argc, char** argv) { return equichar::cli_main(argc, argv, std::cout, std::cerr); }
