#include "gyrolab/cli.hpp"

int main(int argc, char** argv) { return gyrolab::cli_main(argc, argv); }
