#include "ads_spin1/cli.hpp"

int main(int argc, char** argv) { return ads::run_cli(argc, argv); }
