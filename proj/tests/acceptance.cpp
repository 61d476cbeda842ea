// Gate binary: one line per criterion, nonzero exit on any failure.

#include <cstring>
#include <iostream>

#include "fg/acceptance.hpp"

int main(int argc, char** argv) {
  bool stretch = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--stretch") == 0) {
      stretch = true;
    } else {
      std::cerr << "usage: acceptance [--stretch]\n";
      return 2;
    }
  }
  return fg::acc::run_all(stretch, std::cout) ? 0 : 1;
}
