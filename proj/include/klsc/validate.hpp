#ifndef KLSC_VALIDATE_HPP
#define KLSC_VALIDATE_HPP

#include <string>
#include <vector>

namespace klsc {

struct CriterionResult {
  std::string id;     // "AC1".."AC9"
  std::string title;
  bool ok = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0: no time limit
};

struct DeskReport {
  std::vector<CriterionResult> criteria;
  bool ok() const;
};

/// Runs the acceptance corpus: worked examples, the oracle sweep over
/// Bruhat intervals, matroids and polytopes, the property suites, the mod-p
/// matroid checks and the degree contract.
DeskReport run_desk_suite();

}  // namespace klsc

#endif  // KLSC_VALIDATE_HPP
