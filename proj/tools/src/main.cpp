#include <iostream>

#include "quadprime/cli/app.hpp"

int main(int argc, char** argv) { return quadprime::cli::run(argc, argv, std::cout, std::cerr); }
