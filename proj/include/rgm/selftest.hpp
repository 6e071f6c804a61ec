#pragma once
#include <string>
#include <vector>

// Built-in verification battery.  Each criterion recomputes a body of
// frozen facts from scratch and reports pass/fail with a one-line detail;
// the final criterion reruns the battery and compares the serialized
// bytes, so nondeterminism anywhere shows up as its own failure.
namespace rgm::selftest {

struct CriterionResult {
  int number;
  std::string name;
  bool pass;
  std::string detail;
};

// criteria 1..9 in order
std::vector<CriterionResult> run_battery();

// battery plus the determinism criterion (number 10)
std::vector<CriterionResult> run_all();

// "criterion=N name=... status=pass|fail detail=..." per line
std::string machine_lines(const std::vector<CriterionResult>& rs);

}  // namespace rgm::selftest
