#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperoct/class_function.hpp"
#include "hyperoct/rewrite_system.hpp"
#include "hyperoct/signed_combinatorics.hpp"

namespace hyperoct {

// Z1, Z3: rank n with B_n acting. Y1, Y3: rank m in z-coordinates
// (z_jk = y_0jk, z_j = y_{0,-0,j}) with B_{m+1} acting on the letters 0..m.
// Z1 and Y1 share the ungraded ring, Z3 and Y3 the graded one; only the
// action differs.
enum class SpaceKind { kZ1, kZ3, kY1, kY3 };

struct Space {
  SpaceKind kind;
  int rank;

  static Space Z1(int n) { return {SpaceKind::kZ1, n}; }
  static Space Z3(int n) { return {SpaceKind::kZ3, n}; }
  static Space Y1(int m) { return {SpaceKind::kY1, m}; }
  static Space Y3(int m) { return {SpaceKind::kY3, m}; }

  bool graded() const { return kind == SpaceKind::kZ3 || kind == SpaceKind::kY3; }
  bool lifted() const { return kind == SpaceKind::kY1 || kind == SpaceKind::kY3; }
  // Rank of the hyperoctahedral group acting.
  int group_rank() const { return lifted() ? rank + 1 : rank; }
  std::string name() const;
  const RewriteSystem& rewriting() const { return *RewriteSystem::get(rank, graded()); }

  friend bool operator==(const Space&, const Space&) = default;
};

// An element in normal form: every monomial is nbc.
class RingElement {
 public:
  explicit RingElement(Space space) : space_(space) {}
  static RingElement constant(Space space, const Rational& c);
  static RingElement generator(Space space, const Generator& g);
  // Normal form of an arbitrary square-free combination.
  static RingElement from_free(Space space, const FreePolynomial& p);

  Space space() const { return space_; }
  const FreePolynomial& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for zero.
  int degree() const;
  RingElement homogeneous_part(int k) const;
  Rational coefficient(Monomial m) const;

  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const Rational& c);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const Rational& c) { return a *= c; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend bool operator==(const RingElement&, const RingElement&) = default;

  // "z1 z12 - z1 z2"; z_{1,-2} prints as z1~2.
  std::string to_string() const;
  // [{"monomial": ["z1", "z12+"], "coeff": "1/1"}, ...]
  nlohmann::json to_json() const;
  static RingElement from_json(Space space, const nlohmann::json& j);

 private:
  void check_compatible(const RingElement& other) const;

  Space space_;
  FreePolynomial terms_;
};

// A z-label in canonical generators of the space's ring.
RingElement canonicalize(Space space, const ZLabel& label);
// Parses a product of z-labels with optional coefficient, e.g. "-z2 z~12".
RingElement parse_label_expression(Space space, const std::string& text);

// y_abc in z-coordinates of a rank-m space, letters in shifted form.
// Rotation to put 0 (or, failing that, -0) first; y_{-0,b,c} = y_{0,-b,-c};
// y_{0,b,-b} = y_{0,b,-0}; y_{0,b,-0} = 1 - z_b (graded: -z_b); otherwise
// y_jkl = y_0jk - y_0jl + y_0kl.
RingElement y_label(Space space, int a, int b, int c);

// nbc monomials of rank n in index order, optionally of one degree.
std::vector<Monomial> nbc_basis(int n);
std::vector<Monomial> nbc_basis(int n, int degree);
// Number of loop generators z_j in the monomial.
int loop_degree(int n, Monomial m);
// Coefficients of prod_{i=1..n} (1 + (2i-1) t).
std::vector<std::uint64_t> hilbert_series(int n);

// The action of one group element, with generator images cached.
class Action {
 public:
  Action(Space space, const SignedPermutation& sigma);
  const RingElement& generator_image(int id) const { return images_[id]; }
  RingElement apply_monomial(Monomial m) const;
  RingElement apply(const RingElement& x) const;

 private:
  Space space_;
  std::vector<RingElement> images_;
};

// sigma in B_n for Z spaces, in B_{m+1} for Y spaces.
RingElement act(const SignedPermutation& sigma, const RingElement& x);

// Character of the associated graded piece of each degree k = 0..rank.
std::vector<ClassFunction> graded_character(Space space);

// Graded ring of rank n split by (degree, loop degree).
std::map<std::pair<int, int>, ClassFunction> bigraded_character(int n);

// Components of the graph with edges from z_ij^± and marked vertices from
// z_j. A component is negative iff it contains a marked vertex.
SignedSetPartition type_of(int n, const std::vector<Generator>& factors);
SignedSetPartition type_of(int n, Monomial m);

// Trace on the span of nbc monomials whose type has shape lambda, in the
// loop-degree graded ring.
ClassFunction type_character(const SignedPartition& lambda);

}  // namespace hyperoct
