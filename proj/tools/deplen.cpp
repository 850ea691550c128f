#include "deplen/commands.hpp"

int main(int argc, char** argv) { return deplen::cli::run(argc, argv); }
