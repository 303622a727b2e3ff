#include <iostream>

#include "kautz/cli.hpp"

int main(int argc, char** argv) { return kautz::cli::run(argc, argv, std::cout, std::cerr); }
