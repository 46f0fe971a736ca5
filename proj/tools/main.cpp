#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bellbound::cli::run(argc, argv, std::cout, std::cerr); }
