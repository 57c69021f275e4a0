#include "cli.hpp"

int main(int argc, char** argv) { return pegsol::cli::run_cli(argc, argv, std::cout, std::cerr); }
