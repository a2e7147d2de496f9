#include "physent/cli.hpp"

int main(int argc, char** argv) { return physent::cli_main(argc, argv); }
