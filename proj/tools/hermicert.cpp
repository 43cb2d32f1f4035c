#include "hermicert/report.hpp"

int main(int argc, char** argv) { return hermicert::run_cli(argc, argv); }
