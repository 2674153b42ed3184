#pragma once

#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperoct/class_function.hpp"
#include "hyperoct/cyclotomic.hpp"
#include "hyperoct/signed_combinatorics.hpp"

namespace hyperoct {

// chi^lambda(mu) for S_n by Murnaghan-Nakayama, memoized.
Integer sn_character(const Partition& lambda, const Partition& mu);

// chi^{lambda, empty}: the S_n character pulled back along forget_signs.
// The class (alpha|beta) maps to the S_n class alpha ∪ beta.
ClassFunction pullback_from_sn(const Partition& lambda);

struct LinearCharacters {
  ClassFunction trivial;        // chi^{(n),∅}
  ClassFunction negative_sign;  // chi^{∅,(n)}: (-1)^(number of negative entries)
  ClassFunction type_a_sign;    // chi^{(1^n),∅}: sign of the underlying permutation
  ClassFunction product;        // chi^{∅,(1^n)}
};
LinearCharacters linear_characters(int n);

// Induction from B_a x B_b to B_{a+b}, computed by class fusion.
ClassFunction induction_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction bn_irreducible(const SignedPartition& lambda);

// Rows are irreducible characters labelled and ordered like signed_partitions(n).
class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(int n, std::vector<ClassFunction> rows);

  int rank() const { return n_; }
  const std::vector<SignedPartition>& labels() const { return labels_; }
  const std::vector<ClassFunction>& rows() const { return rows_; }
  const ClassFunction& row(const SignedPartition& label) const;

  nlohmann::json to_json() const;
  // Throws std::invalid_argument on malformed or inconsistent JSON.
  static CharacterTable from_json(const nlohmann::json& j);

 private:
  int n_ = 0;
  std::vector<SignedPartition> labels_;
  std::vector<ClassFunction> rows_;
};

CharacterTable compute_character_table(int n);
// Memoized per process.
const CharacterTable& character_table(int n);
// Installs a table (e.g. loaded from disk) for later character_table() calls.
// Ignored if one is already installed.
void preload_character_table(CharacterTable table);

// A linear character on a subgroup of B_n with values zeta_M^exponent.
struct SubgroupCharacter {
  int rank = 0;
  int root_order = 1;
  std::vector<SignedPermutation> elements;
  std::vector<int> exponents;

  std::size_t order() const { return elements.size(); }
};

// rho(element) = zeta_{root_order}^{exponent}.
struct CharacterGenerator {
  SignedPermutation element;
  int exponent;
  int root_order;
};

// Closes the generators to a subgroup and propagates values multiplicatively.
// Throws std::domain_error if an element is reached with two values.
SubgroupCharacter linear_character_closure(int n, const std::vector<CharacterGenerator>& generators);

// On the centralizer of the standard representative: c_i -> omega_{|lambda_i|},
// d_i -> omega_{2|lambda_i|}, block longest elements and block swaps -> 1.
SubgroupCharacter rho_character(const SignedPartition& lambda);

// (1/|H|) sum over x in B_n with x^-1 g x in H of chi(x^-1 g x).
// Throws std::domain_error if a value is not rational.
ClassFunction induce_character(const SubgroupCharacter& chi);

// Multiplicities of the irreducibles. Throws std::domain_error unless chi is
// a genuine character.
std::vector<std::pair<SignedPartition, Integer>> decompose(const ClassFunction& chi);
std::string decomposition_to_string(const std::vector<std::pair<SignedPartition, Integer>>& d);

// Letters 0..N-1 stored at indices 1..N: the cycle 0 -> 1 -> ... -> N-1 -> -0.
SignedPermutation coxeter_element(int N);

// Permutation character of B_N on the left cosets of <generator>, by
// counting fixed cosets.
ClassFunction coset_permutation_character(const SignedPermutation& generator);

}  // namespace hyperoct
