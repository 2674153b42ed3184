#include "hyperoct/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "hyperoct/class_function.hpp"

namespace hyperoct {

namespace {

bool orthonormal(const CharacterTable& t) {
  const auto& rows = t.rows();
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a; b < rows.size(); ++b)
      if (inner_product(rows[a], rows[b]) != (a == b ? 1 : 0)) return false;
  const int n = t.rank();
  return t.row(SignedPartition{{n}, {}}) == trivial_character(n);
}

// Confluent, and every defining relation reduces to 0: the loaded rules then
// present the same ring as freshly derived ones.
bool certified(const RewriteSystem& sys) {
  if (!sys.critical_pair_failures().empty()) return false;
  for (const auto& r : RewriteSystem::defining_relations(sys.rank(), sys.graded()))
    if (!sys.normal_form(r).empty()) return false;
  return true;
}

}  // namespace

std::string character_table_entry(int n) { return "chartable_n" + std::to_string(n) + ".json"; }

std::string rewrite_entry(int n, bool graded) {
  return std::string("rules_") + (graded ? "Z3" : "Z1") + "_n" + std::to_string(n) + ".json";
}

Cache::Cache(std::filesystem::path directory) : directory_(std::move(directory)) {
  if (directory_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  if (!ec) return;
  warn("cache directory " + directory_.string() + " unusable (" + ec.message() + "); continuing uncached");
  directory_.clear();
}

Cache Cache::from_environment() {
  const char* dir = std::getenv("HYPEROCT_CACHE");
  if (dir == nullptr || *dir == '\0') return Cache();
  return Cache(dir);
}

std::filesystem::path Cache::entry_path(const std::string& name) const { return directory_ / name; }

void Cache::warn(std::string message) {
  std::lock_guard lock(*mutex_);
  warnings_->push_back(std::move(message));
}

std::vector<std::string> Cache::warnings() const {
  std::lock_guard lock(*mutex_);
  return *warnings_;
}

bool Cache::load_json(const std::string& name, nlohmann::json& out) {
  if (!enabled()) return false;
  std::ifstream in(entry_path(name));
  if (!in) return false;
  try {
    out = nlohmann::json::parse(in);
    return true;
  } catch (const nlohmann::json::exception&) {
    warn("discarded malformed cache entry " + name);
    return false;
  }
}

void Cache::store_json(const std::string& name, const nlohmann::json& j) {
  if (!enabled()) return;
  // Unique temporary name per writer; rename is atomic within a directory.
  std::ostringstream tmp_name;
  tmp_name << "." << name << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
           << reinterpret_cast<std::uintptr_t>(&j);
  const auto tmp = entry_path(tmp_name.str());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) {
      warn("cannot write cache entry " + name + "; continuing uncached");
      return;
    }
    out << j.dump(1) << '\n';
    if (!out.flush()) {
      warn("cannot write cache entry " + name + "; continuing uncached");
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, entry_path(name), ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    warn("cannot install cache entry " + name + "; continuing uncached");
  }
}

const CharacterTable& Cache::character_table(int n) {
  const std::string name = character_table_entry(n);
  nlohmann::json j;
  if (load_json(name, j)) {
    try {
      CharacterTable t = CharacterTable::from_json(j);
      if (t.rank() == n && orthonormal(t)) {
        preload_character_table(std::move(t));
        return hyperoct::character_table(n);
      }
      warn("discarded cache entry " + name + " (failed orthonormality)");
    } catch (const std::invalid_argument& e) {
      warn("discarded cache entry " + name + " (" + e.what() + ")");
    }
  }
  const CharacterTable& t = hyperoct::character_table(n);
  store_json(name, t.to_json());
  return t;
}

std::shared_ptr<const RewriteSystem> Cache::rewrite_system(int n, bool graded) {
  const std::string name = rewrite_entry(n, graded);
  nlohmann::json j;
  if (load_json(name, j)) {
    try {
      auto sys = RewriteSystem::from_json(j);
      if (sys->rank() == n && sys->graded() == graded && certified(*sys)) {
        RewriteSystem::preload(sys);
        return RewriteSystem::get(n, graded);
      }
      warn("discarded cache entry " + name + " (failed certificate)");
    } catch (const std::invalid_argument& e) {
      warn("discarded cache entry " + name + " (" + e.what() + ")");
    }
  }
  auto sys = RewriteSystem::get(n, graded);
  store_json(name, sys->to_json());
  return sys;
}

}  // namespace hyperoct
