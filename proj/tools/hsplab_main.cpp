#include <iostream>

#include "hsplab/cli.hpp"

int main(int argc, char** argv) { return hsplab::cli::run(argc, argv, std::cout, std::cerr); }
