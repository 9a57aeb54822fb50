// Acceptance suite: runs every criterion at full scale and prints one
// PASS/FAIL line each.  Usage: acceptance <path-to-polyq-cli>
// (the CLI path is needed by the serialization criterion, which respawns it).

#include <cstdio>
#include <string>

#include "polyq/suites.hpp"

int main(int argc, char** argv) {
  std::string exe = argc > 1 ? argv[1] : "";
  bool all = true;
  for (int n = 1; n <= 10; ++n) {
    polyq::CriterionResult r = polyq::run_criterion(n, exe);
    std::printf("%s\n", polyq::format_criterion_line(r).c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  std::printf(all ? "acceptance: PASS\n" : "acceptance: FAIL\n");
  return all ? 0 : 1;
}
