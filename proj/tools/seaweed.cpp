#include "seaweed/cli/commands.hpp"

int main(int argc, char** argv) { return seaweed::cli::run(argc, argv); }
