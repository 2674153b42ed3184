#include "hyperoct/group_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hyperoct/bn_group.hpp"

namespace hyperoct {

AlgebraElement from_dense(int n, std::vector<Rational>& dense) {
  AlgebraElement r(n);
  for (std::uint32_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) r.terms_.emplace_back(i, std::move(dense[i]));
  return r;
}

AlgebraElement::AlgebraElement(int n) : n_(n) { BnGroup::get(n); }

AlgebraElement AlgebraElement::identity(int n) { return basis(SignedPermutation::identity(n)); }

AlgebraElement AlgebraElement::basis(const SignedPermutation& sigma, const Rational& c) {
  AlgebraElement r(sigma.rank());
  r.add_term(sigma, c);
  return r;
}

Rational AlgebraElement::coefficient_at(std::uint32_t index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const auto& t, std::uint32_t i) { return t.first < i; });
  return (it != terms_.end() && it->first == index) ? it->second : Rational(0);
}

Rational AlgebraElement::coefficient(const SignedPermutation& sigma) const {
  return coefficient_at(BnGroup::get(n_).index_of(sigma));
}

std::vector<std::pair<SignedPermutation, Rational>> AlgebraElement::terms() const {
  const auto& g = BnGroup::get(n_);
  std::vector<std::pair<SignedPermutation, Rational>> out;
  for (const auto& [i, c] : terms_) out.emplace_back(g.element(i), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void AlgebraElement::add_term(const SignedPermutation& sigma, const Rational& c) {
  if (sigma.rank() != n_) throw std::invalid_argument("add_term: rank mismatch");
  const std::uint32_t index = BnGroup::get(n_).index_of(sigma);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const auto& t, std::uint32_t i) { return t.first < i; });
  if (it != terms_.end() && it->first == index) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c != 0) {
    terms_.insert(it, {index, c});
  }
}

void AlgebraElement::check_compatible(const AlgebraElement& other) const {
  if (n_ != other.n_) throw std::invalid_argument("group algebra elements of different ranks");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_compatible(other);
  std::vector<std::pair<std::uint32_t, Rational>> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) { return *this += other * Rational(-1); }

AlgebraElement& AlgebraElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_compatible(b);
  const auto& g = BnGroup::get(a.n_);
  std::vector<Rational> dense(g.order());
  for (const auto& [i, ci] : a.terms_)
    for (const auto& [j, cj] : b.terms_) dense[g.multiply(i, j)] += ci * cj;
  return from_dense(a.n_, dense);
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

nlohmann::json AlgebraElement::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [sigma, c] : terms()) j[sigma.to_string()] = format_rational(c);
  return j;
}

AlgebraElement AlgebraElement::from_json(int n, const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("group algebra JSON must be an object");
  AlgebraElement r(n);
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw std::invalid_argument("group algebra JSON: coefficient must be a string");
    r.add_term(SignedPermutation::parse(key), parse_rational(value.get<std::string>()));
  }
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [sigma, c] : terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += pretty_rational(mag) + " ";
    out += "[" + sigma.to_string() + "]";
    first = false;
  }
  return out;
}

AlgebraElement y_basis(const SignedComposition& alpha) {
  const int n = alpha.size();
  AlgebraElement r(n);
  const auto& g = BnGroup::get(n);
  for (const auto& sigma : g.elements())
    if (mr_shape(sigma) == alpha) r.add_term(sigma, 1);
  return r;
}

AlgebraElement x_basis_on(int n, const std::vector<int>& J, const std::vector<int>& A) {
  const int m = static_cast<int>(J.size());
  std::vector<int> w(m);
  std::iota(w.begin(), w.end(), 1);
  AlgebraElement r(n);
  do {
    bool inside = true;
    for (int i = 1; i < m && inside; ++i)
      if (w[i - 1] > w[i] && std::find(A.begin(), A.end(), i) == A.end()) inside = false;
    if (!inside) continue;
    auto images = SignedPermutation::identity(n).one_line();
    for (int i = 0; i < m; ++i) images[J[i] - 1] = J[w[i] - 1];
    r.add_term(SignedPermutation::from_one_line(std::span<const int>(images)), 1);
  } while (std::next_permutation(w.begin(), w.end()));
  return r;
}

AlgebraElement x_basis(int n, const std::vector<int>& A) {
  std::vector<int> J(n);
  std::iota(J.begin(), J.end(), 1);
  return x_basis_on(n, J, A);
}

AlgebraElement reutenauer_idempotent(int n, const std::vector<int>& J) {
  const int m = static_cast<int>(J.size());
  AlgebraElement r(n);
  for (unsigned mask = 0; mask < (1u << std::max(m - 1, 0)); ++mask) {
    std::vector<int> A;
    for (int i = 0; i < m - 1; ++i)
      if (mask & (1u << i)) A.push_back(i + 1);
    const int k = static_cast<int>(A.size());
    r += x_basis_on(n, J, A) * Rational((k % 2 == 0) ? 1 : -1, k + 1);
  }
  return r;
}

AlgebraElement epsilon(int n, const std::vector<int>& J, int sign) {
  AlgebraElement r = AlgebraElement::identity(n) * Rational(1, 2);
  r.add_term(longest_element_on(n, J), Rational(sign > 0 ? 1 : -1, 2));
  return r;
}

AlgebraElement i_p(const SignedComposition& p) {
  const int n = p.size();
  auto d = composition_helpers(p);
  AlgebraElement r = x_basis(n, d.partial_sums);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    r = r * epsilon(n, d.blocks[i], p.parts[i] > 0 ? 1 : -1);
    r = r * reutenauer_idempotent(n, d.blocks[i]);
  }
  return r;
}

namespace {

Rational inverse_factorial(int m) {
  Integer f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return Rational(1) / Rational(f);
}

}  // namespace

AlgebraElement vazirani_idempotent(const SignedPartition& lambda) {
  static std::mutex mutex;
  static std::map<SignedPartition, AlgebraElement> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  const int n = lambda.size();
  AlgebraElement r(n);
  for (const auto& p : signed_compositions(n))
    if (composition_helpers(p).sorted == lambda) r += i_p(p);
  r *= inverse_factorial(lambda.length());
  std::lock_guard lock(mutex);
  cache.emplace(lambda, r);
  return r;
}

AlgebraElement g_k(int n, int k) {
  AlgebraElement r(n);
  for (const auto& lambda : signed_partitions(n))
    if (static_cast<int>(lambda.positive.size()) == k) r += vazirani_idempotent(lambda);
  return r;
}

AlgebraElement eulerian_idempotent(const Partition& lambda) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  AlgebraElement r(n);
  for (const auto& c : compositions(n)) {
    Partition sorted(c);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != lambda) continue;
    SignedComposition p{c};
    auto d = composition_helpers(p);
    AlgebraElement term = x_basis(n, d.partial_sums);
    for (const auto& block : d.blocks) term = term * reutenauer_idempotent(n, block);
    r += term;
  }
  return r * inverse_factorial(static_cast<int>(lambda.size()));
}

AlgebraElement eulerian_idempotent_k(int n, int k) {
  AlgebraElement r(n);
  for (const auto& lambda : partitions(n))
    if (static_cast<int>(lambda.size()) == k + 1) r += eulerian_idempotent(lambda);
  return r;
}

AlgebraElement tau_map(const AlgebraElement& x) {
  AlgebraElement r(x.rank());
  for (const auto& [sigma, c] : x.terms()) r.add_term(forget_signs(sigma), c);
  return r;
}

ClassFunction right_ideal_character(const AlgebraElement& e) {
  if (e * e != e) throw std::domain_error("right_ideal_character: element is not idempotent");
  const int n = e.rank();
  const auto& g = BnGroup::get(n);
  ClassFunction chi(n);
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    const std::uint32_t ginv = g.inverse(g.index_of(g.classes()[c].representative));
    Rational s = 0;
    for (std::uint32_t x = 0; x < g.order(); ++x) s += e.coefficient_at(g.multiply(g.multiply(x, ginv), g.inverse(x)));
    chi[c] = s;
  }
  return chi;
}

}  // namespace hyperoct
