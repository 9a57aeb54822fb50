#pragma once

#include <string>
#include <vector>

namespace polyq {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double budget = 0;  // stated wall-clock budget; exceeding it fails
  std::string detail;
};

// 1 axioms, 2 qe, 3 tails, 4 antichain, 5 dichotomy, 6 decomposition, 7 fusion,
// 8 separation, 9 simplicity, 10 serialization.  The serialization criterion
// respawns exe_path; it fails with an explanation when the path is empty.
CriterionResult run_criterion(int number, const std::string& exe_path);

const std::vector<std::string>& suite_names();

// name is a suite name or "all"; unknown names throw std::invalid_argument.
std::vector<CriterionResult> run_suite(const std::string& name, const std::string& exe_path);

std::string format_criterion_line(const CriterionResult& r);

}  // namespace polyq
