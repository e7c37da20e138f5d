#include "radred/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return radred::cli::run(argc, argv, std::cout, std::cerr); }
