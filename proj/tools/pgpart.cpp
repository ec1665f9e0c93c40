#include <iostream>

#include "pgpart/cli.hpp"

int main(int argc, char** argv) { return pgpart::run_cli(argc, argv, std::cout, std::cerr); }
