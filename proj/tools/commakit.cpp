#include "commakit/cli.hpp"

int main(int argc, char** argv) { return commakit::cli::run(argc, argv); }
