#include "liederiv/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return liederiv::cli::run(argc, argv, std::cout, std::cerr); }
