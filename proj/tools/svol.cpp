#include "svol/cli.hpp"

int main(int argc, char** argv) { return svol::cli::run(argc, argv); }
