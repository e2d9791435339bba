#pragma once

#include <string>
#include <vector>

namespace sepalt {

/// One verified identity.  lhs/rhs carry the compared quantities (exact
/// rationals rendered "p/q", or a short description for vector-valued
/// checks).
struct CheckLine {
  std::string identity;
  int n = 0;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

inline bool all_pass(const std::vector<CheckLine>& lines) {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

}  // namespace sepalt
