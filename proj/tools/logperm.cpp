#include <iostream>

#include "logperm/cli/commands.hpp"

int main(int argc, char** argv) { return logperm::cli::run(argc, argv, std::cout, std::cerr); }
