#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace specker {

struct CheckOptions {
  std::uint64_t seed = 1;
  int cases = 200;  // sample count for randomized suites
  int atoms = 3;    // exhaustive bound for small-scale suites
};

struct CheckResult {
  std::string name;
  bool passed = false;
  long cases_run = 0;
  std::string detail;  // first failure description, empty on success
};

/// Names accepted by run_check, in a stable order.
std::vector<std::string> check_suite_names();

/// Runs one named property suite. Throws DomainError for unknown names.
CheckResult run_check(const std::string& name, const CheckOptions& options = {});

/// Runs every suite.
std::vector<CheckResult> run_all_checks(const CheckOptions& options = {});

}  // namespace specker
