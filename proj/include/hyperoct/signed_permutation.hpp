#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperoct {

inline constexpr int kMaxRank = 16;

// A bijection sigma of {±1..±n} with sigma(-i) = -sigma(i), stored by the
// images of 1..n. Value type; copying is cheap.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  static SignedPermutation identity(int n);
  // Throws std::invalid_argument unless |images| is a permutation of 1..n.
  static SignedPermutation from_one_line(std::span<const int> images);
  static SignedPermutation from_one_line(std::initializer_list<int> images);
  // "2,-3,1"; the empty string is the rank-0 identity.
  static SignedPermutation parse(std::string_view text);

  int rank() const { return n_; }
  // i in ±1..±n.
  int operator()(int i) const { return i > 0 ? images_[i - 1] : -images_[-i - 1]; }
  std::vector<int> one_line() const;

  SignedPermutation inverse() const;
  bool is_positive() const;
  int negative_count() const;
  // Injective on elements of equal rank.
  std::uint64_t key() const;
  std::string to_string() const;

  friend SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.n_ == b.n_ && a.images_ == b.images_;
  }
  friend std::strong_ordering operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  std::array<std::int8_t, kMaxRank> images_{};
  std::uint8_t n_ = 0;
};

// (a∘b)(i) = a(b(i)). Throws std::invalid_argument on rank mismatch.
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);
inline SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  return compose(a, b);
}

// s_i swaps i and i+1 (1 <= i < n).
SignedPermutation simple_transposition(int n, int i);
// t_i negates i.
SignedPermutation sign_change(int n, int i);
// w0 = -1.
SignedPermutation longest_element(int n);
// Negates exactly the letters in block.
SignedPermutation longest_element_on(int n, std::span<const int> block);
// Drops all signs: the image in S_n.
SignedPermutation forget_signs(const SignedPermutation& sigma);

// Embeds sigma in B_{n+1} acting on letters 0..n, with letter l stored at
// index l+1 and 0 fixed. Used for B_n inside the group acting on Y-spaces.
SignedPermutation lift_fixing_zero(const SignedPermutation& sigma);

std::vector<SignedPermutation> all_signed_permutations(int n);

}  // namespace hyperoct

template <>
struct std::hash<hyperoct::SignedPermutation> {
  std::size_t operator()(const hyperoct::SignedPermutation& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.key() * 0x9E3779B97F4A7C15ULL + s.rank());
  }
};
