#include <iostream>

#include "breakout/cli.hpp"

int main(int argc, char** argv) { return breakout::run_cli(argc, argv, std::cout, std::cerr); }
