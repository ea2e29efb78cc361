#include <iostream>

#include "cycroots/cli.hpp"

int main(int argc, char** argv) { return cycroots::run_cli(argc, argv, std::cout, std::cerr); }
