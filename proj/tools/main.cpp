#include "thickness/cli.hpp"

int main(int argc, char** argv) { return thickness::run_cli(argc, argv); }
