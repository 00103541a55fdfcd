#include "qbraid/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qbraid::run_cli(argc, argv, std::cout, std::cerr); }
