#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccsym {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured values behind the verdict
};

/// Runs every acceptance criterion in order.
std::vector<CriterionResult> run_acceptance();

/// One "PASS"/"FAIL" line per criterion; returns true when all pass.
bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace ccsym
