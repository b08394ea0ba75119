// Acceptance runner: one PASS/FAIL line per criterion.
//   ringkt_acceptance [--fields DIR] [id ...]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "criteria.hpp"

int main(int argc, char** argv) {
  std::string fields = RINGKT_FIELDS_DIR;
  if (const char* env = std::getenv("RINGKT_FIELDS_DIR")) fields = env;
  std::vector<int> ids;
  for (int a = 1; a < argc; ++a) {
    std::string arg = argv[a];
    if (arg == "--fields" && a + 1 < argc) {
      fields = argv[++a];
      continue;
    }
    try {
      ids.push_back(std::stoi(arg));
    } catch (const std::exception&) {
      std::cerr << "usage: ringkt_acceptance [--fields DIR] [id ...]\n";
      return 2;
    }
  }
  return ringkt::acceptance::run_all(fields, ids, std::cout) == 0 ? 0 : 1;
}
