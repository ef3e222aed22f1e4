#include "hypspec/cli.hpp"

int main(int argc, char** argv) { return hypspec::run_cli(argc, argv); }
