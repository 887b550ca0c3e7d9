#include <iostream>

#include "monocert/cli.hpp"

int main(int argc, char** argv) { return monocert::cli::run_cli(argc, argv, std::cout, std::cerr); }
