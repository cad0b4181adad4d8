#include <nslab/cli.hpp>

int main(int argc, char** argv) {
  return nslab::cli::run(argc, argv);
}
