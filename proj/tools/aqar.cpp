#include <iostream>

#include "aqar/cli.hpp"

int main(int argc, char **argv) { return aqar::cli::run(argc, argv, std::cout, std::cerr); }
