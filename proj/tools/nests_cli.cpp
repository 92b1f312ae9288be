#include <iostream>

#include "nests/harness/cli.hpp"

int main(int argc, char** argv) { return nests::harness::run_cli(argc, argv, std::cout, std::cerr); }
