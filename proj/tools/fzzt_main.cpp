#include "fzzt/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return fzzt::cli::run(argc, argv, std::cout, std::cerr); }
