#include "sftc/cli.hpp"

int main(int argc, char** argv) { return sftc::run_cli(argc, argv); }
