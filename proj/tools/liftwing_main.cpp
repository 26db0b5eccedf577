#include <iostream>

#include "liftwing/cli.hpp"

int main(int argc, char** argv) { return liftwing::run_cli(argc, argv, std::cout, std::cerr); }
