#include "cli.hpp"

#include <iostream>

int main(int argc, char ** argv) { return magiclab::cli::run(argc, argv, std::cout, std::cerr); }
