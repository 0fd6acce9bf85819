#include <iostream>

#include "largecover/cli.hpp"

int main(int argc, char** argv) { return largecover::cli::run(argc, argv, std::cout, std::cerr); }
