#include <iostream>

#include "sjack/cli.hpp"

int main(int argc, char** argv) { return sjack::run_cli(argc, argv, std::cout, std::cerr); }
