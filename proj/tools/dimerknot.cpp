#include <iostream>

#include "dimerknot/cli.hpp"

int main(int argc, char** argv) { return dimerknot::run_cli(argc, argv, std::cout, std::cerr); }
