#include "riskprop/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return riskprop::cli::run(argc, argv, std::cout, std::cerr); }
