#include "kinmetrics/cli.hpp"

int main(int argc, char** argv) { return kinmetrics::run_main(argc, argv); }
