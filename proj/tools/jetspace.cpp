#include <iostream>

#include "jetspace/cli.hpp"

int main(int argc, char** argv) { return jetspace::cli_main(argc, argv, std::cout, std::cerr); }
