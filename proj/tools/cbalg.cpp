#include "cbalg/cli.hpp"

int main(int argc, char** argv) { return cbalg::cli::run(argc, argv); }
