#include "bonnet/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return bonnet::cli::main_entry(argc, argv, std::cout, std::cerr); }
