#include <iostream>

#include "splinelab/cli.hpp"

int main(int argc, char** argv) { return splinelab::run_cli(argc, argv, std::cout, std::cerr); }
