#include <legsum/cli.hpp>

int main(int argc, char** argv) { return legsum::cli::run(argc, argv); }
