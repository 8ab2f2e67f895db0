#include <iostream>

#include "beattylab/cli.hpp"

int main(int argc, char** argv) { return beattylab::cli::run(argc, argv, std::cout, std::cerr); }
