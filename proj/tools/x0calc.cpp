#include <iostream>

#include "x0calc/cli.hpp"

int main(int argc, char** argv) { return x0calc::cli::run(argc, argv, std::cout, std::cerr); }
