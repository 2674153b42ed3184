#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyperoct {

struct CheckResult {
  std::string id;
  std::string anchor;  // the claim this check certifies
  bool passed = false;
  // On failure, a serialized counterexample.
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::vector<CheckResult> checks;
  // The only field that differs between runs.
  std::int64_t elapsed_ms = 0;

  bool passed() const;
  std::size_t failures() const;
  // {suite, n, checks: [{id, anchor, status, witness}], elapsed_ms}
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

struct SuiteInfo {
  std::string name;
  int min_n;
  int max_n;
  std::string summary;
};

// Every suite except "all", in run order.
const std::vector<SuiteInfo>& suites();
std::optional<SuiteInfo> find_suite(const std::string& name);

// A deferred check. Exceptions thrown by run() are reported as failures.
struct Check {
  std::string id;
  std::string anchor;
  std::function<CheckResult()> run;
};

// Checks of one suite at one n, in report order. Throws std::out_of_range
// for an unknown suite or n outside its bounds.
std::vector<Check> suite_checks(const std::string& name, int n);

// Runs the checks on `threads` workers (0: hardware concurrency) and
// assembles the report in check order. "all" runs every suite at every
// n' <= n inside that suite's bounds, prefixing ids with "suite/n'/".
// Throws std::out_of_range like suite_checks; for "all", n must lie in 1..5.
SuiteReport run_suite(const std::string& name, int n, unsigned threads = 0);

}  // namespace hyperoct
