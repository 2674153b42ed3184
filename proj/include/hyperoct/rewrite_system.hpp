#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperoct/rational.hpp"
#include "hyperoct/ring_labels.hpp"

namespace hyperoct {

// Square-free monomial as a bitmask over GeneratorSet ids.
using Monomial = std::uint64_t;
// Linear combination of square-free monomials.
using FreePolynomial = std::map<Monomial, Rational>;

int monomial_degree(Monomial m);
// Degree first, then the largest generator, then the next largest, and so on.
// For equal degree this is integer comparison of the masks.
bool monomial_less(Monomial a, Monomial b);

// Product in the free commutative algebra where a repeated generator gives 0
// (graded) or itself (ungraded).
FreePolynomial free_multiply(const FreePolynomial& a, const FreePolynomial& b, bool graded);
void add_scaled(FreePolynomial& target, const FreePolynomial& source, const Rational& c);

// A z-label rewritten in canonical generators. Graded: z_ji = -z_ij,
// z_-i = -z_i, z_-i,j = z_i,-j + z_i + z_j, z_-i,-j = z_ij + z_i - z_j.
// Ungraded: the same with the constants z_ji = 1 - z_ij, z_-i = 1 - z_i and
// z_-i,j = z_i,-j + z_i + z_j - 1.
FreePolynomial canonical_label(int n, const ZLabel& label, bool graded);

std::string monomial_pretty(int n, Monomial m);
nlohmann::json monomial_json(int n, Monomial m);

// Oriented quadratic rules for the graded (Z3) or ungraded (Z1) ring of rank n.
// Each rule rewrites a product of two generators from the same hand as a
// combination of nbc monomials that are smaller in the monomial order.
class RewriteSystem {
 public:
  static constexpr int kMaxRank = 6;
  static constexpr std::uint64_t kStepLimit = 50'000'000;

  static std::shared_ptr<const RewriteSystem> get(int n, bool graded);
  // Installs a system (e.g. loaded from disk) for later get() calls. Ignored
  // if one is already installed.
  static void preload(std::shared_ptr<const RewriteSystem> system);
  // Derives the rules from the defining relations. Throws std::logic_error if
  // the row-reduced relations do not have exactly the broken circuits as
  // leading monomials.
  static std::shared_ptr<const RewriteSystem> derive(int n, bool graded);
  // Throws std::invalid_argument on malformed or inconsistent rules.
  static std::shared_ptr<const RewriteSystem> from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  // All B_n images of the displayed relations (and of the squares), written
  // in canonical generators.
  static std::vector<FreePolynomial> defining_relations(int n, bool graded);

  int rank() const { return n_; }
  bool graded() const { return graded_; }
  const std::map<Monomial, FreePolynomial>& rules() const { return rules_; }

  bool is_nbc(Monomial m) const;
  std::size_t nbc_count() const { return nbc_count_; }
  std::size_t nbc_index(Monomial m) const;
  Monomial nbc_monomial(std::size_t index) const;

  // Normal form of m * generator for an nbc monomial m.
  const FreePolynomial& multiply_generator(Monomial m, int generator) const;
  // Product of two normal forms.
  FreePolynomial multiply(const FreePolynomial& a, const FreePolynomial& b) const;
  // Normal form of an arbitrary combination of square-free monomials.
  FreePolynomial normal_form(const FreePolynomial& p) const;

  // Reduces by repeatedly rewriting the largest non-nbc monomial, picking
  // its first or last broken circuit. Independent of the product table.
  FreePolynomial naive_reduce(FreePolynomial p, bool pick_last) const;
  // S-polynomials of overlapping rules (and of rules against the square
  // relation) that fail to reduce to 0. Empty means the rules are confluent.
  std::vector<std::string> critical_pair_failures() const;

 private:
  RewriteSystem(int n, bool graded, std::map<Monomial, FreePolynomial> rules);
  void build_table() const;
  const FreePolynomial& table_product(Monomial m, int generator, std::uint64_t& steps) const;
  void validate() const;

  int n_;
  bool graded_;
  std::map<Monomial, FreePolynomial> rules_;
  std::size_t nbc_count_;
  std::vector<std::size_t> radix_;  // radix_[j] = prod_{i<j} 2i
  mutable std::once_flag table_once_;
  mutable std::vector<FreePolynomial> table_;
  mutable std::vector<std::uint8_t> table_state_;  // 0 empty, 1 in progress, 2 done
};

}  // namespace hyperoct
