#include <iostream>

#include "slc/commands.hpp"

int main(int argc, char** argv) { return slc::cli::run(argc, argv, std::cout, std::cerr); }
