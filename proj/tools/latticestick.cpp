#include <iostream>

#include "latticestick/cli.hpp"

int main(int argc, char** argv) { return latticestick::run_cli(argc, argv, std::cout, std::cerr); }
