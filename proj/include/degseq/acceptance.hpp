#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace degseq {

// Pinned verification suite: every check carries its tolerances in code and
// runs off fixed seeds, so a pass is reproducible bit for bit. quick mode
// shrinks sample counts and sweep widths but never loosens a tolerance.

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // one line of measured numbers
  double seconds = 0;
};

struct Criterion {
  int id = 0;
  std::string name;
  std::function<CriterionResult(bool quick)> run;
};

const std::vector<Criterion>& acceptance_criteria();

// Throws Errc::out_of_range for an unknown id.
CriterionResult run_criterion(int id, bool quick);

// Runs the listed criteria (all of them when `only` is empty), printing one
// PASS/FAIL line each. Returns the number of failures.
int run_acceptance(const std::vector<int>& only, bool quick, std::ostream& out);

}  // namespace degseq
