#include <cstdio>

#include "svol/selftest.hpp"

int main() {
  bool ok = true;
  for (const auto& c : svol::run_acceptance()) {
    std::printf("%s criterion %2d: %s%s%s\n", c.passed ? "PASS" : "FAIL", c.number,
                c.title.c_str(), c.detail.empty() ? "" : " - ", c.detail.c_str());
    ok = ok && c.passed;
  }
  return ok ? 0 : 1;
}
