#include "cli.hpp"

int main(int argc, char** argv) { return coxmorse::cli::run(argc, argv); }
