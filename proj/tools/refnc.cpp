#include "cli.hpp"

int main(int argc, char** argv) { return refnc::cli::run(argc, argv, std::cout, std::cerr); }
