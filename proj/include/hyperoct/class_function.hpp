#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hyperoct/rational.hpp"
#include "hyperoct/signed_combinatorics.hpp"

namespace hyperoct {

// A rational class function on B_n. Values are aligned with
// signed_partitions(n), so index 0 is the identity class.
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(int n);
  // Throws std::invalid_argument on a length mismatch.
  ClassFunction(int n, std::vector<Rational> values);

  int rank() const { return n_; }
  std::size_t class_count() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t c) const { return values_[c]; }
  Rational& operator[](std::size_t c) { return values_[c]; }
  const Rational& at(const SignedPartition& label) const;
  Rational evaluate(const SignedPermutation& sigma) const;
  const Rational& degree() const { return values_.front(); }

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Rational& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& c) { return a *= c; }
  // Pointwise product (tensor product of representations).
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

  std::string to_string() const;
  nlohmann::json to_json() const;
  static ClassFunction from_json(int n, const nlohmann::json& j);

 private:
  void check_compatible(const ClassFunction& other) const;

  int n_ = 0;
  std::vector<Rational> values_;
};

// (1/|B_n|) sum over classes |C| a(C) b(C). Values are real, so no conjugation.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction trivial_character(int n);
ClassFunction regular_character(int n);

}  // namespace hyperoct
