#include <iostream>

#include "qline/analysis/cli.hpp"

int main(int argc, char** argv) { return qline::analysis::cli_main(argc, argv, std::cout, std::cerr); }
