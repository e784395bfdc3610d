#include <iostream>

#include "hint/cli.hpp"

int main(int argc, char** argv) { return hint::run_cli(argc, argv, std::cout, std::cerr); }
