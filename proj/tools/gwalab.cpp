#include <iostream>

#include "gwalab/cli.hpp"

int main(int argc, char** argv) {
  const gwalab::CommandResult r = gwalab::run_command({argv + 1, argv + argc});
  (r.exit_code == 2 ? std::cerr : std::cout) << r.output;
  return r.exit_code;
}
