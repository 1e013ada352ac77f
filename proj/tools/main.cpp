#include <iostream>

#include "sesim/cli.hpp"

int main(int argc, char** argv) { return sesim::run_cli(argc, argv, std::cout, std::cerr); }
