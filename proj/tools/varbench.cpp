#include "varbench/cli.hpp"

int main(int argc, char** argv) { return varbench::cli::run_cli(argc, argv); }
