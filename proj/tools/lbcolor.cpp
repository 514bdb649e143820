#include <iostream>

#include "lbcolor/cli.hpp"

int main(int argc, char** argv) { return lbcolor::run_cli(argc, argv, std::cout, std::cerr); }
