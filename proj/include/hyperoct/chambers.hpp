#pragma once

#include <string>
#include <vector>

#include "hyperoct/linear_algebra.hpp"
#include "hyperoct/presented_rings.hpp"
#include "hyperoct/ring_labels.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

// The word (a_1..a_n) stands for the cyclic word
// (0, a_1, ..., a_n, -0, -a_1, ..., -a_n) on the letters of [n]_0^±.
class Chamber {
 public:
  // Throws std::invalid_argument unless |word| is a permutation of 1..n.
  explicit Chamber(std::vector<int> word);
  int rank() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  // The full cyclic word in shifted letters (0 is 1, -0 is -1).
  std::vector<int> cyclic_word() const;
  // "(0,1,-2,-0,-1,2)".
  std::string to_string() const;

  friend auto operator<=>(const Chamber&, const Chamber&) = default;
  friend bool operator==(const Chamber&, const Chamber&) = default;

 private:
  std::vector<int> word_;
};

// All 2^n n! chambers.
std::vector<Chamber> all_chambers(int n);

// 1 iff the shifted letters a, b, c occur in this cyclic order.
int evaluate_y(int a, int b, int c, const Chamber& chamber);
// z_jk = y_0jk and z_j = y_{0,-0,j}.
int evaluate_z(const ZLabel& label, const Chamber& chamber);
// Value of an ungraded element (Z1 or Y1 of the chamber's rank) as a function
// on chambers.
Rational evaluate(const RingElement& x, const Chamber& chamber);

// sigma in B_{n+1}: relabel the cyclic word, then rotate 0 to the front.
Chamber chamber_action(const SignedPermutation& sigma, const Chamber& chamber);

struct EvaluationMatrix {
  std::vector<Chamber> chambers;
  std::vector<Monomial> monomials;
  RationalMatrix entries;  // rows: chambers, columns: nbc monomials
  std::size_t rank;
};

// Products of generator indicators on all chambers.
EvaluationMatrix evaluation_matrix(int n);

}  // namespace hyperoct
