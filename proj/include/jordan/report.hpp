#pragma once

#include <string>
#include <vector>

namespace jordan {

// Outcome of one exact verification; failure carries the first offending case.
struct CheckReport {
  std::string name;
  bool pass = true;
  std::string detail;
};

inline bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace jordan
