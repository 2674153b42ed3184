#include "hyperoct/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hyperoct {
namespace {

// Exact quotient of a by the monic b; throws if the remainder is nonzero.
std::vector<Integer> exact_divide(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("exact_divide: degree too small");
  std::vector<Integer> q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (const auto& r : a)
    if (r != 0) throw std::logic_error("exact_divide: nonzero remainder");
  return q;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  static std::recursive_mutex mutex;
  static std::map<int, std::vector<Integer>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  std::vector<Integer> p(m + 1);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
  return cache.emplace(m, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  coeffs_.resize(cyclotomic_polynomial(order).size() - 1);
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, int order) {
  Cyclotomic c(order);
  c.coeffs_[0] = q;
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(int order, long exponent) {
  long e = exponent % order;
  if (e < 0) e += order;
  std::vector<Rational> poly(e + 1);
  poly[e] = 1;
  return from_polynomial(order, std::move(poly));
}

Cyclotomic Cyclotomic::from_polynomial(int order, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > d;) {
    if (poly[i] == 0) continue;
    const Rational c = poly[i];
    for (std::size_t j = 0; j <= d; ++j) poly[i - d + j] -= c * Rational(phi[j]);
  }
  Cyclotomic r(order);
  for (std::size_t i = 0; i < d && i < poly.size(); ++i) r.coeffs_[i] = poly[i];
  return r;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
  return coeffs_[0];
}

Cyclotomic Cyclotomic::conj() const {
  // zeta^i -> zeta^(m-i)
  std::vector<Rational> poly(order_ + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i == 0 ? 0 : order_ - i] += coeffs_[i];
  return from_polynomial(order_, std::move(poly));
}

void Cyclotomic::check_compatible(const Cyclotomic& other) const {
  if (order_ != other.order_) throw std::invalid_argument("cyclotomic numbers of different orders");
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_compatible(b);
  std::vector<Rational> poly(a.coeffs_.size() + b.coeffs_.size());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) poly[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Cyclotomic::from_polynomial(a.order_, std::move(poly));
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += pretty_rational(coeffs_[i]);
    if (i > 0) out += "*z^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace hyperoct
