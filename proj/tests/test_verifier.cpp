#include <doctest.h>

#include <set>

#include "hyperoct/verifier.hpp"

using namespace hyperoct;

TEST_CASE("suite registry") {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  CHECK(names == std::vector<std::string>{"idempotents", "tau", "characters", "tables-b2", "hilbert", "main-iso",
                                          "recursion", "ungraded", "gn1", "bigrading", "equivariant", "chambers"});
  CHECK(find_suite("hilbert")->max_n == 5);
  CHECK(!find_suite("all"));
  CHECK_THROWS_AS(suite_checks("nosuch", 2), std::out_of_range);
  CHECK_THROWS_AS(suite_checks("main-iso", 5), std::out_of_range);
  CHECK_THROWS_AS(suite_checks("recursion", 1), std::out_of_range);
  CHECK_THROWS_AS(run_suite("all", 6), std::out_of_range);
  CHECK_THROWS_AS(run_suite("tables-b2", 3), std::out_of_range);
}

TEST_CASE("check ids are unique within a suite") {
  for (const auto& s : suites())
    for (int n = s.min_n; n <= std::min(s.max_n, 3); ++n) {
      std::set<std::string> ids;
      for (const auto& c : suite_checks(s.name, n)) {
        CHECK(ids.insert(c.id).second);
        CHECK(!c.anchor.empty());
      }
    }
}

TEST_CASE("reports are deterministic apart from timing") {
  auto a = run_suite("characters", 2, 4), b = run_suite("characters", 2, 1);
  a.elapsed_ms = b.elapsed_ms = 0;
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.to_text() == b.to_text());
  CHECK(a.passed());
}

TEST_CASE("report schema") {
  const auto r = run_suite("idempotents", 1);
  const auto j = r.to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"suite", "n", "checks", "elapsed_ms"});
  for (const auto& c : j["checks"]) {
    std::vector<std::string> ck;
    for (const auto& [k, v] : c.items()) ck.push_back(k);
    CHECK(ck == std::vector<std::string>{"id", "anchor", "status", "witness"});
    CHECK(c["status"] == "pass");
  }
  CHECK(r.to_text().find("g(1|) = 1/2 [-1] + 1/2 [1]") != std::string::npos);
  CHECK(r.to_text().find("sum = [1]") != std::string::npos);
}

TEST_CASE("the combined suite prefixes ids") {
  const auto r = run_suite("all", 1);
  CHECK(r.passed());
  CHECK(r.checks.front().id.rfind("idempotents/1/", 0) == 0);
}

TEST_CASE("failures carry a witness") {
  SuiteReport r;
  r.checks.push_back({"x", "claim", false, "counterexample"});
  CHECK(!r.passed());
  CHECK(r.failures() == 1);
  CHECK(r.to_json()["checks"][0]["status"] == "fail");
  CHECK(r.to_text().find("FAIL x") != std::string::npos);
}
