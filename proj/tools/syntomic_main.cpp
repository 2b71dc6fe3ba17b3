#include <iostream>

#include "syntomic/cli.hpp"

int main(int argc, char** argv) { return syntomic::run_cli(argc, argv, std::cout, std::cerr); }
