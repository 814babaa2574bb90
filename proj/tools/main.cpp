#include <iostream>

#include "nilknap/cli.hpp"

int main(int argc, char** argv) { return nilknap::cli_main(argc, argv, std::cout, std::cerr); }
