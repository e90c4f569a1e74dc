#include "syzygy/driver.hpp"

int main(int argc, char** argv) { return syzygy::cli::run(argc, argv); }
