#include "ghc/cli.hpp"

int main(int argc, char** argv) { return ghc::run_cli(argc, argv); }
