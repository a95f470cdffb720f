#include "tuplesieve/cli.hpp"

int main(int argc, char** argv) { return tuplesieve::cli::run(argc, argv); }
