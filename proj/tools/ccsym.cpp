#include <iostream>

#include "ccsym/cli.hpp"

int main(int argc, char** argv) { return ccsym::run_cli(argc, argv, std::cout, std::cerr); }
