#include <iostream>

#include "argkit/cli.hpp"

int main(int argc, char** argv) { return argkit::cli_main(argc, argv, std::cout, std::cerr); }
