#include <cstdio>

#include "tcw/acceptance.hpp"

int main() {
  auto results = tcw::run_acceptance();
  std::fputs(tcw::acceptance_table(results).c_str(), stdout);
  int failed = 0;
  for (auto& r : results) failed += !r.pass;
  if (failed) std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
