#include "mincodes/cli.hpp"

int main(int argc, char** argv) { return mincodes::cli::run(argc, argv); }
