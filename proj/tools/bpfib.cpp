#include <iostream>

#include "bpfib/cli.hpp"

int main(int argc, char** argv) { return bpfib::cli::main_entry(argc, argv, std::cout, std::cerr); }
