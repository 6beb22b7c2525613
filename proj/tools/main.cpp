#include "cli.hpp"

int main(int argc, char** argv) { return cheblab::cli::run(argc, argv); }
