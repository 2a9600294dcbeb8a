#include <iostream>

#include "pkroots/cli.hpp"

int main(int argc, char** argv) { return pkroots::cli::main_entry(argc, argv, std::cout, std::cerr); }
