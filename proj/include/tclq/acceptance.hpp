#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tclq {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // measured value, target, tolerance
};

// Runs every acceptance criterion; failures are results, not errors.
// `random_pairs` sizes the randomized identity checks (minimum 1000).
std::vector<CriterionResult> acceptance_suite(int random_pairs = 1000);

// One line per criterion plus a summary; returns true when all passed.
bool print_acceptance(const std::vector<CriterionResult>& results,
                      std::ostream& out);

}  // namespace tclq
