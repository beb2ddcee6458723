#include "cli/run.hpp"

int main(int argc, char** argv) { return gapspec::cli::run(argc, argv); }
