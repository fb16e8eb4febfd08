#include "cli.hpp"

int main(int argc, char** argv) { return suspkit::cli::run(argc, argv); }
