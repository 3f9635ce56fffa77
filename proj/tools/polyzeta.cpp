#include <iostream>

#include "polyzeta/cli.hpp"

int main(int argc, char** argv) { return polyzeta::run(argc, argv, std::cout, std::cerr); }
