#include "fencekit/cli.hpp"

int main(int argc, char** argv) { return fencekit::run_cli(argc, argv); }
