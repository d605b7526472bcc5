#include <iostream>

#include "heisred/cli.hpp"

int main(int argc, char **argv) { return heisred::main_entry(argc, argv, std::cout, std::cerr); }
