#include "polyrec/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polyrec::cli::main(argc, argv, std::cout, std::cerr); }
