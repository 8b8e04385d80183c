#include <galoiskit/cli.hpp>

int main(int argc, char** argv) { return galoiskit::cli::run(argc, argv); }
