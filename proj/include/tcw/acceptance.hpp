#ifndef TCW_ACCEPTANCE_HPP
#define TCW_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace tcw {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the full end-to-end verification suite: every compiled circuit against
// its brute-force oracle, every counting identity, every cover/bound/thinness
// property at checkable scale.
std::vector<CriterionResult> run_acceptance();

std::string acceptance_table(const std::vector<CriterionResult>& results);

}  // namespace tcw

#endif
