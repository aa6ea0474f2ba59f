#include <iostream>

#include "vlh/cli.hpp"

int main(int argc, char** argv) { return vlh::run_cli(argc, argv, std::cout, std::cerr); }
