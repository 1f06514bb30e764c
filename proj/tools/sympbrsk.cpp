#include <iostream>

#include "sympbrsk/cli.hpp"

int main(int argc, char** argv) { return sympbrsk::cli::run(argc, argv, std::cout, std::cerr); }
