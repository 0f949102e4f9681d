#include "qess/cli.hpp"

int main(int argc, char** argv) { return qess::run_cli(argc, argv); }
