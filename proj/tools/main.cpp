#include "cb/cli.hpp"

int main(int argc, char** argv) { return cb::cli::run_main(argc, argv); }
