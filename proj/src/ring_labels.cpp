#include "hyperoct/ring_labels.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hyperoct {

ZLabel ZLabel::loop(int a) {
  if (a == 0) throw std::invalid_argument("z-label index must be nonzero");
  return {a, 0};
}

ZLabel ZLabel::pair(int a, int b) {
  if (a == 0 || b == 0 || std::abs(a) == std::abs(b)) throw std::invalid_argument("z-label needs two distinct indices");
  return {a, b};
}

int ZLabel::max_index() const { return std::max(std::abs(a), std::abs(b)); }

ZLabel ZLabel::relabel(const SignedPermutation& sigma) const {
  return is_loop() ? loop(sigma(a)) : pair(sigma(a), sigma(b));
}

namespace {

std::string index_string(int x) { return (x < 0 ? "~" : "") + std::to_string(std::abs(x)); }

}  // namespace

std::string ZLabel::to_string() const {
  return "z" + index_string(a) + (is_loop() ? "" : index_string(b));
}

ZLabel ZLabel::parse(std::string_view text) {
  if (text.empty() || text[0] != 'z') throw std::invalid_argument("malformed z-label: " + std::string(text));
  std::vector<int> idx;
  bool bar = false;
  for (std::size_t p = 1; p < text.size(); ++p) {
    char c = text[p];
    if (c == '~') {
      if (bar) throw std::invalid_argument("malformed z-label: " + std::string(text));
      bar = true;
    } else if (c >= '1' && c <= '9') {
      idx.push_back(bar ? -(c - '0') : (c - '0'));
      bar = false;
    } else {
      throw std::invalid_argument("malformed z-label: " + std::string(text));
    }
  }
  if (bar) throw std::invalid_argument("malformed z-label: " + std::string(text));
  if (idx.size() == 1) return loop(idx[0]);
  if (idx.size() == 2) return pair(idx[0], idx[1]);
  throw std::invalid_argument("malformed z-label: " + std::string(text));
}

std::string Generator::json_name() const {
  if (is_loop()) return "z" + std::to_string(j);
  return "z" + std::to_string(i) + std::to_string(j) + (bar ? "-" : "+");
}

std::string Generator::pretty_name() const {
  if (is_loop()) return "z" + std::to_string(j);
  return "z" + std::to_string(i) + (bar ? "~" : "") + std::to_string(j);
}

const GeneratorSet& GeneratorSet::get(int n) {
  if (n < 0 || n > kMaxRank) throw std::out_of_range("GeneratorSet: rank out of range");
  static std::array<std::unique_ptr<GeneratorSet>, kMaxRank + 1> sets;
  static std::array<std::once_flag, kMaxRank + 1> once;
  std::call_once(once[n], [n] { sets[n].reset(new GeneratorSet(n)); });
  return *sets[n];
}

GeneratorSet::GeneratorSet(int n) : n_(n), hand_masks_(n + 1, 0) {
  auto key = [](const Generator& g) {
    return g.is_loop() ? std::make_pair(0, 2 * g.j - 1) : std::make_pair(2 * g.i - 1, 2 * g.j - 1 + (g.bar ? 1 : 0));
  };
  for (int j = 1; j <= n; ++j) {
    generators_.push_back({0, j, false});
    for (int i = 1; i < j; ++i) {
      generators_.push_back({i, j, false});
      generators_.push_back({i, j, true});
    }
  }
  std::sort(generators_.begin(), generators_.end(), [&](const Generator& x, const Generator& y) { return key(x) < key(y); });
  for (int id = 0; id < size(); ++id) hand_masks_[generators_[id].j] |= std::uint64_t{1} << id;
}

int GeneratorSet::id_of(const Generator& g) const {
  for (int id = 0; id < size(); ++id)
    if (generators_[id] == g) return id;
  throw std::invalid_argument("generator outside rank " + std::to_string(n_));
}

int GeneratorSet::id_of_json_name(std::string_view name) const {
  for (int id = 0; id < size(); ++id)
    if (generators_[id].json_name() == name) return id;
  throw std::invalid_argument("unknown generator name: " + std::string(name));
}

std::string letter_to_string(int shifted) {
  return (shifted < 0 ? "-" : "") + std::to_string(std::abs(shifted) - 1);
}

}  // namespace hyperoct
