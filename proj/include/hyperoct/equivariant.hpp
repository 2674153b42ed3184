#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperoct/presented_rings.hpp"
#include "hyperoct/ring_labels.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

// Polynomial in z-labels and the equivariant parameter u (degree 2).
// Key: (power of u, sorted factor labels).
using FormalKey = std::pair<int, std::vector<ZLabel>>;
using FormalPolynomial = std::map<FormalKey, Rational>;

FormalPolynomial formal_label(const ZLabel& z);
FormalPolynomial formal_u();
FormalPolynomial formal_constant(const Rational& c);
FormalPolynomial operator+(FormalPolynomial a, const FormalPolynomial& b);
FormalPolynomial operator-(FormalPolynomial a, const FormalPolynomial& b);
FormalPolynomial operator*(const FormalPolynomial& a, const FormalPolynomial& b);
// Throws std::domain_error if some term has no factor of u.
FormalPolynomial divide_by_u(const FormalPolynomial& p);
FormalPolynomial relabel(const FormalPolynomial& p, const SignedPermutation& sigma);
std::string formal_to_string(const FormalPolynomial& p);

struct EquivariantRelation {
  std::string family;  // "square", "triangle", "loop-triangle", "mixed-triangle"
  FormalPolynomial polynomial;
};

// square: z(z - u) for every label.
// triangle: u^-1 [z_ij z_jk (z_ik - u) - (z_ij - u)(z_jk - u) z_ik].
// loop-triangle: u^-1 [z_ij z_i (z_j - u) - (z_ij - u)(z_i - u) z_j].
// mixed-triangle: u^-1 [z_j z_ij^- (z_ij - u) - (z_j - u)(z_ij^- - u) z_ij].
// All B_n images, deduplicated.
class EquivariantRelationSet {
 public:
  explicit EquivariantRelationSet(int n);

  int rank() const { return n_; }
  const std::vector<EquivariantRelation>& relations() const { return relations_; }
  bool contains(const FormalPolynomial& p) const;

 private:
  int n_;
  std::vector<EquivariantRelation> relations_;
  std::map<FormalPolynomial, std::size_t> index_;
};

// Substitutes u and expands in Z3 (u = 0) or Z1 (u = 1) of the same rank.
// The equivariant label rules specialize to the ring's canonicalization.
RingElement specialize(const FormalPolynomial& p, int n, int u);
std::vector<RingElement> specialize(const EquivariantRelationSet& set, int u);
// The same substitution expanded in the free square-free algebra, without
// reducing modulo the ring's relations.
FreePolynomial specialize_free(const FormalPolynomial& p, int n, int u);

}  // namespace hyperoct
