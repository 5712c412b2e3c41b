#include "hopfcore/cli.hpp"

int main(int argc, char** argv) { return hopfcore::run_cli(argc, argv); }
