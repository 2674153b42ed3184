#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "hyperoct/cache.hpp"

using namespace hyperoct;
namespace fs = std::filesystem;

namespace {

fs::path fresh_directory(const std::string& tag) {
  std::random_device rd;
  auto dir = fs::temp_directory_path() / ("hyperoct-test-" + tag + "-" + std::to_string(rd()));
  fs::remove_all(dir);
  return dir;
}

bool mentions(const std::vector<std::string>& warnings, const std::string& what) {
  for (const auto& w : warnings)
    if (w.find(what) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("a disabled cache still answers") {
  Cache cache;
  CHECK(!cache.enabled());
  CHECK(cache.character_table(2).rows().size() == 5);
  CHECK(cache.rewrite_system(2, true)->rules().size() == 3);
  CHECK(cache.warnings().empty());
}

TEST_CASE("entries are written once and reread") {
  const auto dir = fresh_directory("roundtrip");
  {
    Cache cache(dir);
    cache.character_table(3);
    cache.rewrite_system(3, false);
    CHECK(cache.warnings().empty());
  }
  CHECK(fs::exists(dir / character_table_entry(3)));
  CHECK(fs::exists(dir / rewrite_entry(3, false)));
  const auto stamp = fs::last_write_time(dir / character_table_entry(3));
  Cache again(dir);
  CHECK(again.character_table(3).rows() == character_table(3).rows());
  CHECK(again.rewrite_system(3, false)->rules() == RewriteSystem::get(3, false)->rules());
  CHECK(fs::last_write_time(dir / character_table_entry(3)) == stamp);
  CHECK(again.warnings().empty());
  fs::remove_all(dir);
}

TEST_CASE("poisoned entries are discarded and rebuilt") {
  const auto dir = fresh_directory("poison");
  fs::create_directories(dir);
  std::ofstream(dir / character_table_entry(2)) << "{\"n\": 2, \"rows\": ";
  auto bad_rows = character_table(2).to_json();
  bad_rows["rows"]["(2|)"][1] = "5/1";
  std::ofstream(dir / character_table_entry(3)) << bad_rows.dump();
  std::ofstream(dir / rewrite_entry(2, true)) << "{\"rank\": 2, \"graded\": true, \"rules\": []}";

  Cache cache(dir);
  CHECK(cache.character_table(2).rows() == character_table(2).rows());
  cache.character_table(3);
  CHECK(cache.rewrite_system(2, true)->rules().size() == 3);
  const auto w = cache.warnings();
  CHECK(mentions(w, "malformed cache entry " + character_table_entry(2)));
  CHECK(mentions(w, character_table_entry(3)));
  CHECK(mentions(w, rewrite_entry(2, true)));

  std::ifstream in(dir / character_table_entry(2));
  CHECK(CharacterTable::from_json(nlohmann::json::parse(in)).rows() == character_table(2).rows());
  fs::remove_all(dir);
}

TEST_CASE("an unusable directory degrades to no cache") {
  const auto file = fresh_directory("plain");
  std::ofstream(file) << "x";
  Cache cache(file / "sub");
  CHECK(!cache.enabled());
  CHECK(cache.character_table(2).rows().size() == 5);
  CHECK(mentions(cache.warnings(), "continuing uncached"));
  fs::remove(file);
}

TEST_CASE("concurrent writers leave complete entries") {
  const auto dir = fresh_directory("concurrent");
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&] {
      Cache cache(dir);
      for (int n = 1; n <= 3; ++n) {
        cache.character_table(n);
        cache.rewrite_system(n, n % 2 == 0);
      }
    });
  for (auto& t : threads) t.join();
  for (const auto& entry : fs::directory_iterator(dir)) {
    CHECK(entry.path().filename().string().front() != '.');
    std::ifstream in(entry.path());
    CHECK(!nlohmann::json::parse(in, nullptr, false).is_discarded());
  }
  fs::remove_all(dir);
}
