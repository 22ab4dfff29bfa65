#include <iostream>

#include "csg/cli.hpp"

int main(int argc, char** argv) { return csg::cli::run(argc, argv, std::cout, std::cerr); }
