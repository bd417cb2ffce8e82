#include <iostream>

#include "pmds/cli.hpp"

int main(int argc, char** argv) { return pmds::cli::run(argc, argv, std::cout, std::cerr); }
