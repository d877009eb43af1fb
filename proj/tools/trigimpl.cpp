#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "trigimpl/cli/cli.hpp"

int main(int argc, char** argv) {
  const int code = trigimpl::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
  std::cout.flush();
  std::cerr.flush();
  // a timed-out slow-tier worker may still be running
  std::_Exit(code);
}
