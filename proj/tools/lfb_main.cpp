#include "lfbounds/cli.hpp"

int main(int argc, char** argv) { return lfb::cli::run(argc, argv); }
