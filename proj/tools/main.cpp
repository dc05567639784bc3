#include <iostream>

#include "fracdim/cli/run.hpp"

int main(int argc, char** argv) { return fracdim::cli::run_cli(argc, argv, std::cout, std::cerr); }
