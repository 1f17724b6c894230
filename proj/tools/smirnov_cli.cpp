#include <smirnov/cli.hpp>

int main(int argc, char** argv) { return smirnov::run_cli(argc, argv); }
