#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "degseq/acceptance.hpp"
#include "degseq/errors.hpp"

// Driver for the pinned verification suite. Exits 0 when every requested
// criterion passes, 1 otherwise.
//
//   acceptance_tests [--quick] [--list] [--only N [--only M ...]]

int main(int argc, char** argv) {
  bool quick = false;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--quick") {
      quick = true;
    } else if (arg == "--list") {
      for (const degseq::Criterion& c : degseq::acceptance_criteria())
        std::printf("%2d  %s\n", c.id, c.name.c_str());
      return 0;
    } else if (arg == "--only" && i + 1 < argc) {
      only.push_back(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--quick] [--list] [--only N ...]\n", argv[0]);
      return 2;
    }
  }
  try {
    const int failures = degseq::run_acceptance(only, quick, std::cout);
    return failures == 0 ? 0 : 1;
  } catch (const degseq::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
