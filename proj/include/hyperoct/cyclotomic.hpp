#pragma once

#include <string>
#include <vector>

#include "hyperoct/rational.hpp"

namespace hyperoct {

// Coefficients of the m-th cyclotomic polynomial, constant term first.
// Obtained from x^m - 1 by exact division by Phi_d for the proper divisors d.
const std::vector<Integer>& cyclotomic_polynomial(int m);

// An element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^(phi(m)-1).
// Every instance is reduced modulo Phi_m, so == is structural.
class Cyclotomic {
 public:
  explicit Cyclotomic(int order = 1);
  static Cyclotomic from_rational(const Rational& q, int order = 1);
  static Cyclotomic root_of_unity(int order, long exponent);
  // Reduces an arbitrary polynomial in zeta_m.
  static Cyclotomic from_polynomial(int order, std::vector<Rational> coefficients);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_rational() const;
  // Throws std::domain_error unless is_rational().
  Rational rational_value() const;
  // Complex conjugate: zeta -> zeta^-1.
  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& c);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& c) { return a *= c; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic&, const Cyclotomic&) = default;

  std::string to_string() const;

 private:
  void check_compatible(const Cyclotomic& other) const;

  int order_;
  std::vector<Rational> coeffs_;
};

}  // namespace hyperoct
