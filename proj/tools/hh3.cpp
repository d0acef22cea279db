#include <iostream>

#include "hh3/cli.hpp"

int main(int argc, char** argv) { return hh3::run_cli(argc, argv, std::cout, std::cerr); }
