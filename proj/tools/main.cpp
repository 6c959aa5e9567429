#include "sitnikov/cli.hpp"

int main(int argc, char** argv) { return sitnikov::cli::run(argc, argv); }
