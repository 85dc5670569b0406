#pragma once

#include <string>
#include <vector>

namespace bn {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string observed;  // bands/constants backing the verdict
};

/// Named invariant suites: trig, entire, concave, extremal, hardy, all.
/// Throws std::domain_error for an unknown suite name.
std::vector<CheckResult> verify_suite(const std::string& suite);

}  // namespace bn
