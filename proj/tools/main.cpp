#include "smt/cli.hpp"

int main(int argc, char** argv) { return smt::cli::run(argc, argv); }
