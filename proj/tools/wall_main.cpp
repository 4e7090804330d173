#include <iostream>

#include "wall/cli.hpp"

int main(int argc, char** argv) { return wall::run_cli(argc, argv, std::cout, std::cerr); }
