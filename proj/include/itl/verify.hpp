#pragma once

#include <string>
#include <vector>

namespace itl {

struct CheckResult {
  std::string tag;
  bool pass = false;
  std::string detail;
};

// Runs the tagged theorem/property battery. `full` runs everything at desk
// scale; otherwise a fast subset (~1 minute) is selected.
std::vector<CheckResult> run_verification(bool full);

}  // namespace itl
