#include <iostream>

#include "piprod/cli.hpp"

int main(int argc, char** argv) { return piprod::cli::run(argc, argv, std::cout, std::cerr); }
