#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

// A pair (positive | negative) of partitions. Labels conjugacy classes of B_n
// and irreducible characters of B_n.
struct SignedPartition {
  Partition positive;
  Partition negative;

  int size() const;
  int length() const { return static_cast<int>(positive.size() + negative.size()); }
  // "(2|3,2)", "(|1,1)", "(1|)".
  std::string to_string() const;
  // Throws std::invalid_argument on malformed text or non-decreasing parts.
  static SignedPartition parse(std::string_view text);

  friend auto operator<=>(const SignedPartition&, const SignedPartition&) = default;
  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

// Partitions of n in decreasing lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);
Partition partition_union(const Partition& a, const Partition& b);
std::string partition_to_string(const Partition& p);

// All signed partitions of n. Order: |positive| descending; positive side in
// increasing lexicographic order; negative side in decreasing lexicographic
// order. Starts with the identity class ((1^n)|).
std::vector<SignedPartition> signed_partitions(int n);

// Nonzero signed parts; |parts| sum to the size.
struct SignedComposition {
  std::vector<int> parts;

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  std::string to_string() const;
  static SignedComposition parse(std::string_view text);

  friend auto operator<=>(const SignedComposition&, const SignedComposition&) = default;
  friend bool operator==(const SignedComposition&, const SignedComposition&) = default;
};

// 2 * 3^(n-1) compositions for n >= 1, in a fixed order.
std::vector<SignedComposition> signed_compositions(int n);
std::vector<std::vector<int>> compositions(int n);

struct CompositionData {
  std::vector<int> magnitudes;              // |p_i|
  std::vector<int> partial_sums;            // first l-1 partial sums
  std::vector<std::vector<int>> blocks;     // consecutive intervals of sizes |p_i|
  SignedPartition sorted;                   // parts sorted by sign, then size
};
CompositionData composition_helpers(const SignedComposition& p);

// Blocks are sorted internally and ordered by their least element.
struct SignedSetPartition {
  std::vector<std::vector<int>> positive_blocks;
  std::vector<std::vector<int>> negative_blocks;

  void normalize();
  SignedPartition shape() const;
  std::string to_string() const;
  friend bool operator==(const SignedSetPartition&, const SignedSetPartition&) = default;
};

// A cycle of the orbit of |.| is negative iff the sign product along it is -1.
SignedPartition cycle_type(const SignedPermutation& sigma);

// Mantaci-Reutenauer shape. A descent at i when sigma_i, sigma_{i+1} have
// opposite signs, or equal signs and |sigma_i| > |sigma_{i+1}|.
SignedComposition mr_shape(const SignedPermutation& sigma);

// Type-A descent set {i : w_i > w_{i+1}} of a positive permutation.
std::vector<int> descent_set(const SignedPermutation& w);

std::uint64_t hyperoctahedral_order(int n);
// prod over parts k of (2k)^m_k m_k!, taken separately on each side.
std::uint64_t centralizer_order(const SignedPartition& lambda);

struct ConjugacyClass {
  SignedPartition label;
  std::uint64_t size;
  SignedPermutation representative;
};
// Sizes from centralizer orders; representatives are standard.
std::vector<ConjugacyClass> conjugacy_classes(int n);

// Consecutive blocks for the parts of lambda, positive parts first.
std::vector<std::vector<int>> standard_blocks(const SignedPartition& lambda);

// Positive part on block B: the cycle b_1 -> b_2 -> ... -> b_k -> b_1.
// Negative part: c * w0 on odd blocks, the negative cycle
// b_1 -> b_2 -> ... -> b_k -> -b_1 on even blocks.
SignedPermutation standard_representative(const SignedPartition& lambda);

enum class CentralizerGeneratorKind {
  kCycle,          // c_i on a positive block
  kBlockLongest,   // w0 on a positive block
  kNegativeCycle,  // d_i on a negative block
  kBlockSwap,      // swaps adjacent blocks of equal size and sign
};

struct CentralizerGenerator {
  SignedPermutation element;
  CentralizerGeneratorKind kind;
  int block;
  int part;  // size of the block
};

std::vector<CentralizerGenerator> centralizer_generators(const SignedPartition& lambda);

}  // namespace hyperoct
