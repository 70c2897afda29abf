#include "gds/cli.hpp"

int main(int argc, char** argv) { return gds::run_cli(argc, argv); }
