#include "gr2/cli.hpp"

int main(int argc, char** argv) { return gr2::cli::run(argc, argv); }
