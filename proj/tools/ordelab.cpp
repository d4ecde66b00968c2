#include "ordelab/cli.hpp"

int main(int argc, char** argv) { return ordelab::run_cli(argc, argv); }
