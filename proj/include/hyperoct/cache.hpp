#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hyperoct/character_theory.hpp"
#include "hyperoct/rewrite_system.hpp"

namespace hyperoct {

// On-disk cache of character tables and rewrite rules. Entries are written to
// a temporary file and renamed into place, so readers never see a torn file.
// A loaded entry must pass its certificate (orthonormality for tables,
// validation plus critical pairs for rules); otherwise it is rebuilt.
class Cache {
 public:
  // Disabled cache: everything is computed in memory.
  Cache() = default;
  explicit Cache(std::filesystem::path directory);
  // Reads HYPEROCT_CACHE; unset or empty disables the cache.
  static Cache from_environment();

  bool enabled() const { return !directory_.empty(); }
  const std::filesystem::path& directory() const { return directory_; }

  // Loads or computes, stores, and installs into the process registry.
  const CharacterTable& character_table(int n);
  std::shared_ptr<const RewriteSystem> rewrite_system(int n, bool graded);

  // Human-readable notes about discarded entries and failed writes.
  std::vector<std::string> warnings() const;

 private:
  std::filesystem::path entry_path(const std::string& name) const;
  bool load_json(const std::string& name, nlohmann::json& out);
  void store_json(const std::string& name, const nlohmann::json& j);
  void warn(std::string message);

  std::filesystem::path directory_;
  mutable std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
  std::shared_ptr<std::vector<std::string>> warnings_ = std::make_shared<std::vector<std::string>>();
};

std::string character_table_entry(int n);
std::string rewrite_entry(int n, bool graded);

}  // namespace hyperoct
