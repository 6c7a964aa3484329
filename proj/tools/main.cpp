#include <iostream>

#include "ureg/cli.hpp"

int main(int argc, char** argv) { return ureg::run_cli(argc, argv, std::cout, std::cerr); }
