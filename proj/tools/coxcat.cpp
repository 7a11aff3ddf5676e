#include <iostream>

#include "coxcat/cli.hpp"

int main(int argc, char** argv) { return coxcat::cli::run(argc, argv, std::cout, std::cerr); }
