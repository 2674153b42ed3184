#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "hyperoct/signed_combinatorics.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

// Enumerated B_n with element indices, inverses, class membership and a
// lazily built multiplication table. Instances are shared and immutable
// once built; get() is thread-safe.
class BnGroup {
 public:
  static constexpr int kMaxEnumeratedRank = 6;
  static constexpr int kMaxTabulatedRank = 5;

  static const BnGroup& get(int n);

  int rank() const { return n_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(elements_.size()); }
  const SignedPermutation& element(std::uint32_t index) const { return elements_[index]; }
  const std::vector<SignedPermutation>& elements() const { return elements_; }
  std::uint32_t index_of(const SignedPermutation& sigma) const;
  std::uint32_t identity_index() const { return identity_; }
  std::uint32_t inverse(std::uint32_t index) const { return inverses_[index]; }
  // Index of element(a) * element(b).
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const;

  // Aligned with signed_partitions(n).
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::uint32_t index) const { return class_of_[index]; }
  std::size_t class_index(const SignedPartition& label) const;

 private:
  explicit BnGroup(int n);
  void build_table() const;

  int n_;
  std::vector<SignedPermutation> elements_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> inverses_;
  std::uint32_t identity_ = 0;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_of_;
  mutable std::once_flag table_once_;
  mutable std::vector<std::uint16_t> table_;
};

}  // namespace hyperoct
