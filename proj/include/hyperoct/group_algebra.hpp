#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hyperoct/class_function.hpp"
#include "hyperoct/rational.hpp"
#include "hyperoct/signed_combinatorics.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

// An element of Q[B_n]. S_n sits inside as the all-positive subgroup.
// Terms are kept sorted by group index with no zero coefficients.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(int n);
  static AlgebraElement identity(int n);
  static AlgebraElement basis(const SignedPermutation& sigma, const Rational& c = 1);

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const SignedPermutation& sigma) const;
  Rational coefficient_at(std::uint32_t index) const;
  std::vector<std::pair<SignedPermutation, Rational>> terms() const;
  const std::vector<std::pair<std::uint32_t, Rational>>& indexed_terms() const { return terms_; }

  void add_term(const SignedPermutation& sigma, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& c) { return a *= c; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  // {"2,-3,1": "1/2", ...}
  nlohmann::json to_json() const;
  static AlgebraElement from_json(int n, const nlohmann::json& j);
  // "1/2 [1,2] - 1/2 [2,1]"
  std::string to_string() const;

 private:
  friend AlgebraElement from_dense(int n, std::vector<Rational>& dense);
  void check_compatible(const AlgebraElement& other) const;

  int n_ = 0;
  std::vector<std::pair<std::uint32_t, Rational>> terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// Sum of all sigma with mr_shape(sigma) == alpha.
AlgebraElement y_basis(const SignedComposition& alpha);

// Sum of w in S_n with Des(w) inside A.
AlgebraElement x_basis(int n, const std::vector<int>& A);

// X_A of S_m transported onto the letters J (|J| = m) by i -> J[i-1].
AlgebraElement x_basis_on(int n, const std::vector<int>& J, const std::vector<int>& A);

// sum over A in [m-1] of (-1)^|A| / (|A|+1) X_A, transported onto J.
AlgebraElement reutenauer_idempotent(int n, const std::vector<int>& J);

// (1 + sign * w0 on J) / 2.
AlgebraElement epsilon(int n, const std::vector<int>& J, int sign);

// X_{p-hat} eps_1 r_1 eps_2 r_2 ... over the blocks of p.
AlgebraElement i_p(const SignedComposition& p);

// (1 / l(lambda)!) sum of I_p over p with sorted(p) = lambda.
AlgebraElement vazirani_idempotent(const SignedPartition& lambda);

// Sum of g_lambda over lambda with l(lambda+) = k.
AlgebraElement g_k(int n, int k);

// Type-A family on S_n: e_lambda and e_k = sum over l(lambda) = k+1.
AlgebraElement eulerian_idempotent(const Partition& lambda);
AlgebraElement eulerian_idempotent_k(int n, int k);

// Linear extension of forget_signs.
AlgebraElement tau_map(const AlgebraElement& x);

// Character of the right ideal e Q[B_n] under right multiplication:
// chi(g) = sum over x of the coefficient of x g^-1 x^-1 in e.
// Throws std::domain_error unless e * e == e.
ClassFunction right_ideal_character(const AlgebraElement& e);

}  // namespace hyperoct
