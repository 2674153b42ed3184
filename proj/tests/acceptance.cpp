// One line per acceptance criterion, each backed by the verification suites.
// Exit status is nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "hyperoct/verifier.hpp"

using namespace hyperoct;

namespace {

struct Selection {
  std::string suite;
  std::vector<int> ns;
  std::vector<std::string> prefixes;  // empty: every check
};

class Runner {
 public:
  // Suites whose runtime is bounded run on one worker so the bound refers
  // to a single core.
  const SuiteReport& report(const std::string& suite, int n) {
    const auto key = suite + "/" + std::to_string(n);
    auto it = reports_.find(key);
    if (it == reports_.end()) {
      const bool timed = n == 4 && (suite == "idempotents" || suite == "main-iso");
      it = reports_.emplace(key, run_suite(suite, n, timed ? 1 : 0)).first;
    }
    return it->second;
  }

 private:
  std::map<std::string, SuiteReport> reports_;
};

bool selected(const CheckResult& c, const std::vector<std::string>& prefixes) {
  if (prefixes.empty()) return true;
  for (const auto& p : prefixes)
    if (c.id.rfind(p, 0) == 0) return true;
  return false;
}

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

Outcome evaluate(Runner& runner, const std::vector<Selection>& selections) {
  Outcome out;
  for (const auto& s : selections)
    for (int n : s.ns)
      for (const auto& c : runner.report(s.suite, n).checks) {
        if (!selected(c, s.prefixes)) continue;
        ++out.checks;
        if (!c.passed) out.failures.push_back(s.suite + " n=" + std::to_string(n) + " " + c.id + ": " + c.witness);
      }
  if (out.checks == 0) out.failures.push_back("no checks selected");
  return out;
}

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int i = a; i <= b; ++i) v.push_back(i);
  return v;
}

std::string witness_of(Runner& runner, const std::string& suite, int n, const std::string& id) {
  for (const auto& c : runner.report(suite, n).checks)
    if (c.id == id) return c.witness;
  return {};
}

struct Criterion {
  int number;
  std::string claim;
  std::function<Outcome(Runner&)> run;
};

void require_runtime(Runner& runner, Outcome& out, const std::string& suite, std::int64_t limit_ms) {
  const auto ms = runner.report(suite, 4).elapsed_ms;
  out.notes.push_back(suite + " n=4 on one core: " + std::to_string(ms) + " ms");
  if (ms > limit_ms) out.failures.push_back(suite + " n=4 took " + std::to_string(ms) + " ms, limit " + std::to_string(limit_ms));
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {1, "idempotent families are complete and orthogonal, n = 1..4",
       [](Runner& r) {
         auto o = evaluate(r, {{"idempotents", range(1, 4), {"g-idempotent/", "g-orthogonal/", "g-complete", "gk-"}}});
         require_runtime(r, o, "idempotents", 3 * 60 * 1000);
         return o;
       }},
      {2, "forgetting signs sends the family to the Eulerian idempotents, n = 1..4",
       [](Runner& r) { return evaluate(r, {{"tau", range(1, 4), {"tau-image/", "tau-gk/"}}}); }},
      {3, "character tables: B_1 and B_2 as printed, orthogonality and Burnside sum for n = 3, 4",
       [](Runner& r) {
         return evaluate(r, {{"characters", {1}, {"table-b1"}},
                             {"characters", {2}, {"table-b2"}},
                             {"characters", {3, 4}, {"row-orthonormality", "column-orthogonality", "burnside-sum"}}});
       }},
      {4, "graded decomposition of the n = 2 ring",
       [](Runner& r) { return evaluate(r, {{"tables-b2", {2}, {"b2-graded-decomposition/"}}}); }},
      {5, "degree pieces of H*Z_n^3 and gr H*Z_n^1 are the right ideals g_(n-k) Q[B_n], n = 1..4",
       [](Runner& r) {
         auto o = evaluate(r, {{"main-iso", range(1, 4), {"degree-vs-idempotent/"}}});
         require_runtime(r, o, "main-iso", 10 * 60 * 1000);
         return o;
       }},
      {6, "type pieces equal g_lambda Q[B_n] and the induced centralizer characters, n = 1..4",
       [](Runner& r) { return evaluate(r, {{"main-iso", range(1, 4), {"type-vs-idempotent/"}}}); }},
      {7, "recursion from the lifted space, n = 2..4",
       [](Runner& r) { return evaluate(r, {{"recursion", range(2, 4), {"recursion/"}}}); }},
      {8, "ungraded totals: regular for Z_n, coset character for Y_(n+1)",
       [](Runner& r) {
         return evaluate(r, {{"ungraded", range(1, 4), {"total-Z3-regular"}}, {"ungraded", range(1, 3), {"total-Y3-coset"}}});
       }},
      {9, "single-loop top piece: dimension for n <= 5, both inductions for n <= 4",
       [](Runner& r) {
         return evaluate(r, {{"gn1", range(1, 5), {"dimension"}},
                             {"gn1", range(1, 4), {"character-vs-centralizer-induction", "character-vs-cycle-induction"}}});
       }},
      {10, "Hilbert series and bigraded counts, n <= 5",
       [](Runner& r) {
         auto o = evaluate(r, {{"hilbert", range(1, 5), {"series", "nbc-count/", "bigraded-counts"}}});
         const auto w = witness_of(r, "hilbert", 2, "series");
         o.notes.push_back("n = 2: " + w);
         if (w.find("H*Z_n^3: 1 + 4t^2 + 3t^4") == std::string::npos) o.failures.push_back("n = 2 series is " + w);
         return o;
       }},
      {11, "B_2 action table and eigenvectors",
       [](Runner& r) { return evaluate(r, {{"tables-b2", {2}, {"b2-action", "eigenvector/"}}}); }},
      {12, "chamber model: Heaviside table, pointwise relations, full evaluation rank, stabilizer",
       [](Runner& r) {
         return evaluate(r, {{"chambers", {2}, {"heaviside-table"}},
                             {"chambers", range(1, 3), {"cyclic-relations", "ungraded-relations"}},
                             {"chambers", range(1, 4), {"evaluation-rank", "chamber-count", "coxeter-stabilizer"}}});
       }},
      {13, "equivariant relations vanish at u = 0 in Z3 and u = 1 in Z1, n <= 4",
       [](Runner& r) { return evaluate(r, {{"equivariant", range(1, 4), {"specialization-vanishes/"}}}); }},
      {14, "property suites: actions, confluence, homomorphy, orthonormality",
       [](Runner& r) {
         return evaluate(r, {{"main-iso", range(1, 4), {"action-axioms/"}},
                             {"chambers", range(1, 4), {"chamber-action-axioms"}},
                             {"hilbert", range(1, 5), {"confluence/", "relations-reduce/", "nbc-count/"}},
                             {"tau", range(1, 4), {"forget-signs-homomorphism", "tau-multiplicative"}},
                             {"characters", range(1, 4), {"row-orthonormality", "symmetric-group-orthonormality"}}});
       }},
  };
  return c;
}

}  // namespace

int main() {
  Runner runner;
  int failed = 0;
  std::vector<std::string> details;
  for (const auto& c : criteria()) {
    Outcome o;
    try {
      o = c.run(runner);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = o.failures.empty();
    if (!ok) ++failed;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.claim << " (" << o.checks
              << " checks";
    for (const auto& note : o.notes) std::cout << "; " << note;
    std::cout << ")\n";
    for (const auto& f : o.failures) details.push_back("criterion " + std::to_string(c.number) + ": " + f);
  }
  for (const auto& d : details) std::cout << "  " << d << "\n";
  std::cout << (criteria().size() - static_cast<std::size_t>(failed)) << "/" << criteria().size()
            << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
