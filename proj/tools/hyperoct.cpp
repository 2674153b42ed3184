#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperoct/cache.hpp"
#include "hyperoct/verifier.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string suite_list() {
  std::string out;
  for (const auto& s : hyperoct::suites())
    out += "  " + s.name + " (n = " + std::to_string(s.min_n) + ".." + std::to_string(s.max_n) + "): " + s.summary + "\n";
  out += "  all (n = 1..5): every suite at every n' <= n within its bounds\n";
  return out;
}

// Builds the shared tables up front so a warm cache is used by every check.
// Y-spaces of rank n carry B_(n+1), hence the table one rank up.
void warm_cache(hyperoct::Cache& cache, int n) {
  if (!cache.enabled()) return;
  for (int m = 1; m <= std::min(n + 1, 5); ++m) cache.character_table(m);
  for (int m = 1; m <= n; ++m)
    for (bool graded : {true, false}) cache.rewrite_system(m, graded);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of hyperoctahedral idempotents and configuration-space cohomology"};
  app.require_subcommand(1);
  app.footer("Suites:\n" + suite_list());

  std::string suite, format = "text", out_path;
  int n = 0;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("--n", n, "Rank")->required();
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out_path, "Write the report to FILE instead of stdout");
  verify->add_option("--threads", threads, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (suite != "all" && !hyperoct::find_suite(suite)) {
    std::cerr << "unknown suite '" << suite << "'. Known suites:\n" << suite_list();
    return kExitUsage;
  }

  hyperoct::SuiteReport report;
  try {
    // Validate bounds before touching the cache.
    if (suite == "all") {
      if (n < 1 || n > 5) throw std::out_of_range("suite all supports n in 1..5, got " + std::to_string(n));
    } else {
      hyperoct::suite_checks(suite, n);
    }
    auto cache = hyperoct::Cache::from_environment();
    warm_cache(cache, n);
    for (const auto& w : cache.warnings()) std::cerr << "warning: " << w << "\n";
    report = hyperoct::run_suite(suite, n, threads);
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string text = format == "json" ? report.to_json().dump(2) + "\n" : report.to_text();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!(out << text)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
  }
  return report.passed() ? 0 : kExitFail;
}
