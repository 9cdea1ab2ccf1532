#include "netcolor/cli.hpp"

int main(int argc, char** argv) { return netcolor::cli_main(argc, argv); }
