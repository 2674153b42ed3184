#include "hyperoct/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperoct {

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 0 || n > kMaxRank) throw std::invalid_argument("rank out of range");
  SignedPermutation s;
  s.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) s.images_[i] = static_cast<std::int8_t>(i + 1);
  return s;
}

SignedPermutation SignedPermutation::from_one_line(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  if (n > kMaxRank) throw std::invalid_argument("rank exceeds supported maximum");
  std::vector<bool> seen(n + 1, false);
  SignedPermutation s;
  s.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) {
    int a = std::abs(images[i]);
    if (a < 1 || a > n || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = true;
    s.images_[i] = static_cast<std::int8_t>(images[i]);
  }
  return s;
}

SignedPermutation SignedPermutation::from_one_line(std::initializer_list<int> images) {
  std::vector<int> v(images);
  return from_one_line(std::span<const int>(v));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::vector<int> v;
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '(' || c == ')'; }),
          s.end());
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed signed permutation: " + std::string(text));
      }
      if (used != item.size()) throw std::invalid_argument("malformed signed permutation: " + std::string(text));
      v.push_back(x);
    }
  }
  return from_one_line(std::span<const int>(v));
}

std::vector<int> SignedPermutation::one_line() const {
  return std::vector<int>(images_.begin(), images_.begin() + n_);
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    int a = images_[i];
    r.images_[std::abs(a) - 1] = static_cast<std::int8_t>(a > 0 ? i + 1 : -(i + 1));
  }
  return r;
}

bool SignedPermutation::is_positive() const {
  return std::all_of(images_.begin(), images_.begin() + n_, [](std::int8_t a) { return a > 0; });
}

int SignedPermutation::negative_count() const {
  return static_cast<int>(std::count_if(images_.begin(), images_.begin() + n_, [](std::int8_t a) { return a < 0; }));
}

std::uint64_t SignedPermutation::key() const {
  std::uint64_t k = 0;
  for (int i = 0; i < n_; ++i) k = (k << 6) | static_cast<std::uint64_t>(images_[i] + 32);
  return k;
}

std::string SignedPermutation::to_string() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("compose: rank mismatch");
  SignedPermutation r;
  r.n_ = a.n_;
  for (int i = 1; i <= a.rank(); ++i) r.images_[i - 1] = static_cast<std::int8_t>(a(b(i)));
  return r;
}

SignedPermutation simple_transposition(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple_transposition: index out of range");
  auto v = SignedPermutation::identity(n).one_line();
  std::swap(v[i - 1], v[i]);
  return SignedPermutation::from_one_line(std::span<const int>(v));
}

SignedPermutation sign_change(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("sign_change: index out of range");
  auto v = SignedPermutation::identity(n).one_line();
  v[i - 1] = -v[i - 1];
  return SignedPermutation::from_one_line(std::span<const int>(v));
}

SignedPermutation longest_element(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = -(i + 1);
  return SignedPermutation::from_one_line(std::span<const int>(v));
}

SignedPermutation longest_element_on(int n, std::span<const int> block) {
  auto v = SignedPermutation::identity(n).one_line();
  for (int j : block) {
    if (j < 1 || j > n) throw std::invalid_argument("longest_element_on: letter out of range");
    v[j - 1] = -v[j - 1];
  }
  return SignedPermutation::from_one_line(std::span<const int>(v));
}

SignedPermutation forget_signs(const SignedPermutation& sigma) {
  auto v = sigma.one_line();
  for (int& x : v) x = std::abs(x);
  return SignedPermutation::from_one_line(std::span<const int>(v));
}

SignedPermutation lift_fixing_zero(const SignedPermutation& sigma) {
  std::vector<int> v{1};
  for (int x : sigma.one_line()) v.push_back(x > 0 ? x + 1 : x - 1);
  return SignedPermutation::from_one_line(std::span<const int>(v));
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> v(perm);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) v[i] = -v[i];
      out.push_back(SignedPermutation::from_one_line(std::span<const int>(v)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace hyperoct
