#include "sigforge/cli.hpp"

int main(int argc, char** argv) { return sigforge::run_cli(argc, argv); }
