#include "switchtrack/cli.hpp"

int main(int argc, char** argv) { return switchtrack::cli_main(argc, argv); }
