#include "genrigid/acceptance.hpp"

#include <cstdio>

int main() {
  using namespace genrigid::acceptance;
  Settings s;
  bool all = true;
  for (const auto& r : run_all(s)) {
    std::printf("[%s] criterion %d (%s): %s  (%.1fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
