#pragma once

#include <string>
#include <vector>

namespace bwcoh {

/// Outcome of a structural check. Violations are reported, never thrown.
struct ValidityReport {
  std::vector<std::string> violations;

  bool valid() const { return violations.empty(); }
  /// "valid" or the first violated clause.
  std::string summary() const { return valid() ? std::string("valid") : violations.front(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
};

}  // namespace bwcoh
