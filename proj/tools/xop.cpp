#include <iostream>

#include "xop/cli.hpp"

int main(int argc, char** argv) { return xop::cli::run(argc, argv, std::cout, std::cerr); }
