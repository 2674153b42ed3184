#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

// A possibly non-canonical z-label: the loop z_a (b == 0) or z_{a,b} with
// |a| != |b|. Indices are signed and nonzero.
struct ZLabel {
  int a = 0;
  int b = 0;

  static ZLabel loop(int a);
  static ZLabel pair(int a, int b);
  bool is_loop() const { return b == 0; }
  int max_index() const;
  ZLabel relabel(const SignedPermutation& sigma) const;
  // "z1", "z~1", "z12", "z1~2", "z~2~1".
  std::string to_string() const;
  // Inverse of to_string; indices are single digits.
  static ZLabel parse(std::string_view text);

  friend auto operator<=>(const ZLabel&, const ZLabel&) = default;
  friend bool operator==(const ZLabel&, const ZLabel&) = default;
};

// A canonical generator: z_j (i == 0), z_ij^+ = z_{i,j} or z_ij^- = z_{i,-j}
// with 0 < i < j.
struct Generator {
  int i = 0;
  int j = 0;
  bool bar = false;

  bool is_loop() const { return i == 0; }
  int hand() const { return j; }
  ZLabel label() const { return is_loop() ? ZLabel::loop(j) : ZLabel::pair(i, bar ? -j : j); }
  // "z1", "z12+", "z12-".
  std::string json_name() const;
  // "z1", "z12", "z1~2".
  std::string pretty_name() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
  friend bool operator==(const Generator&, const Generator&) = default;
};

// Generators of rank n listed in increasing monomial-order position. The
// order is lexicographic on index pairs under -0 < 1 < -1 < 2 < -2 < ...,
// with z_j read as z_{-0, j}. Supports n <= 8 so masks fit in 64 bits.
class GeneratorSet {
 public:
  static constexpr int kMaxRank = 8;
  static const GeneratorSet& get(int n);

  int rank() const { return n_; }
  int size() const { return static_cast<int>(generators_.size()); }
  const Generator& operator[](int id) const { return generators_[id]; }
  // Throws std::invalid_argument if the generator does not belong to rank n.
  int id_of(const Generator& g) const;
  int id_of_json_name(std::string_view name) const;
  std::uint64_t hand_mask(int j) const { return hand_masks_[j]; }
  bool is_loop_id(int id) const { return generators_[id].is_loop(); }

 private:
  explicit GeneratorSet(int n);
  int n_;
  std::vector<Generator> generators_;
  std::vector<std::uint64_t> hand_masks_;  // index 1..n
};

// Letters of [m]_0^± in shifted form: the letter l is stored as l+1 and its
// bar as -(l+1). So 0 is 1 and -0 is -1, and B_{m+1} acts by evaluation.
inline int shifted_letter(int letter, bool bar) { return bar ? -(letter + 1) : letter + 1; }
// "0", "-0", "2", "-2".
std::string letter_to_string(int shifted);

}  // namespace hyperoct
