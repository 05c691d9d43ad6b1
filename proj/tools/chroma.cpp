// Command-line front end; subcommands are wired up in cli_main.
#include "chroma/cli.hpp"

int main(int argc, char** argv) { return chroma::cli_main(argc, argv); }
