#include "semicore/cli.hpp"

int main(int argc, char** argv) { return semicore::run_cli(argc, argv); }
