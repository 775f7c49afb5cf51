#include <iostream>

#include "dmqc/cli.hpp"

int main(int argc, char** argv) { return dmqc::cli::run(argc, argv, std::cout, std::cerr); }
