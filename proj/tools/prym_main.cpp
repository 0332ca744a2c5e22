#include "prym/report.hpp"

int main(int argc, char** argv) { return prym::run_cli(argc, argv); }
