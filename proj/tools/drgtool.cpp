#include <iostream>

#include "drg/cli.hpp"

int main(int argc, char** argv) { return drg::run(argc, argv, std::cout, std::cerr); }
