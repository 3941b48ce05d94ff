#include <iostream>

#include "kempf/cli.hpp"

int main(int argc, char** argv) { return kempf::run_cli(argc, argv, std::cout, std::cerr); }
