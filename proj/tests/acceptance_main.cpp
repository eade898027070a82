// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.
// "--fast" skips the two PDE criteria.

#include "vortexmod/acceptance.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
  const bool fast = argc > 1 && std::strcmp(argv[1], "--fast") == 0;
  bool all = true;
  for (const auto& r : vortexmod::acceptance::run_acceptance(fast)) {
    std::cout << vortexmod::acceptance::format(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
