#include <iostream>

#include "pdemlab_cli/run.hpp"

int main(int argc, char** argv) { return pdemlab::cli::run_command_line(argc, argv, std::cout, std::cerr); }
