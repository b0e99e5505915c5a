#include <iostream>

#include "groupstar/cli.hpp"

int main(int argc, char** argv) { return groupstar::cli::run(argc, argv, std::cout, std::cerr); }
