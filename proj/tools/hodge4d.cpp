#include <iostream>

#include "hodge4d/cli.hpp"

int main(int argc, char** argv) { return hodge4d::cli::run(argc, argv, std::cout, std::cerr); }
