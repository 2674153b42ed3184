#include "hyperoct/equivariant.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperoct {
namespace {

void accumulate(FormalPolynomial& target, const FormalKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = target.try_emplace(key, 0);
  it->second += c;
  if (it->second == 0) target.erase(it);
}

}  // namespace

FormalPolynomial formal_label(const ZLabel& z) { return {{{0, {z}}, 1}}; }
FormalPolynomial formal_u() { return {{{1, {}}, 1}}; }

FormalPolynomial formal_constant(const Rational& c) {
  FormalPolynomial p;
  accumulate(p, {0, {}}, c);
  return p;
}

FormalPolynomial operator+(FormalPolynomial a, const FormalPolynomial& b) {
  for (const auto& [k, c] : b) accumulate(a, k, c);
  return a;
}

FormalPolynomial operator-(FormalPolynomial a, const FormalPolynomial& b) {
  for (const auto& [k, c] : b) accumulate(a, k, -c);
  return a;
}

FormalPolynomial operator*(const FormalPolynomial& a, const FormalPolynomial& b) {
  FormalPolynomial r;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<ZLabel> f(ka.second);
      f.insert(f.end(), kb.second.begin(), kb.second.end());
      std::sort(f.begin(), f.end());
      accumulate(r, {ka.first + kb.first, std::move(f)}, ca * cb);
    }
  return r;
}

FormalPolynomial divide_by_u(const FormalPolynomial& p) {
  FormalPolynomial r;
  for (const auto& [k, c] : p) {
    if (k.first < 1) throw std::domain_error("divide_by_u: term without u: " + formal_to_string(p));
    accumulate(r, {k.first - 1, k.second}, c);
  }
  return r;
}

FormalPolynomial relabel(const FormalPolynomial& p, const SignedPermutation& sigma) {
  FormalPolynomial r;
  for (const auto& [k, c] : p) {
    std::vector<ZLabel> f;
    for (const auto& z : k.second) f.push_back(z.relabel(sigma));
    std::sort(f.begin(), f.end());
    accumulate(r, {k.first, std::move(f)}, c);
  }
  return r;
}

std::string formal_to_string(const FormalPolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : p) {
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    const Rational mag = abs(c);
    std::string body;
    if (k.first == 1) body += "u";
    if (k.first > 1) body += "u^" + std::to_string(k.first);
    for (const auto& z : k.second) body += (body.empty() ? "" : " ") + z.to_string();
    if (body.empty()) {
      out += pretty_rational(mag);
    } else {
      out += (mag != 1 ? pretty_rational(mag) + " " : "") + body;
    }
  }
  return out;
}

EquivariantRelationSet::EquivariantRelationSet(int n) : n_(n) {
  const FormalPolynomial u = formal_u();
  auto Z = [](int a) { return formal_label(ZLabel::loop(a)); };
  auto L = [](int a, int b) { return formal_label(ZLabel::pair(a, b)); };
  std::vector<EquivariantRelation> templates;
  for (int i = 1; i <= n; ++i) templates.push_back({"square", Z(i) * (Z(i) - u)});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      templates.push_back({"square", L(i, j) * (L(i, j) - u)});
      templates.push_back({"square", L(i, -j) * (L(i, -j) - u)});
      templates.push_back({"loop-triangle", divide_by_u(L(i, j) * Z(i) * (Z(j) - u) - (L(i, j) - u) * (Z(i) - u) * Z(j))});
      templates.push_back(
          {"mixed-triangle", divide_by_u(Z(j) * L(i, -j) * (L(i, j) - u) - (Z(j) - u) * (L(i, -j) - u) * L(i, j))});
      for (int k = j + 1; k <= n; ++k)
        templates.push_back(
            {"triangle", divide_by_u(L(i, j) * L(j, k) * (L(i, k) - u) - (L(i, j) - u) * (L(j, k) - u) * L(i, k))});
    }
  const auto group = all_signed_permutations(n);
  for (const auto& t : templates)
    for (const auto& sigma : group) {
      FormalPolynomial image = relabel(t.polynomial, sigma);
      if (index_.emplace(image, relations_.size()).second) relations_.push_back({t.family, std::move(image)});
    }
}

bool EquivariantRelationSet::contains(const FormalPolynomial& p) const { return index_.count(p) > 0; }

RingElement specialize(const FormalPolynomial& p, int n, int u) {
  if (u != 0 && u != 1) throw std::invalid_argument("specialize: u must be 0 or 1");
  const Space space = u == 0 ? Space::Z3(n) : Space::Z1(n);
  RingElement total(space);
  for (const auto& [k, c] : p) {
    if (u == 0 && k.first > 0) continue;
    RingElement term = RingElement::constant(space, c);
    for (const auto& z : k.second) term = term * canonicalize(space, z);
    total += term;
  }
  return total;
}

FreePolynomial specialize_free(const FormalPolynomial& p, int n, int u) {
  if (u != 0 && u != 1) throw std::invalid_argument("specialize_free: u must be 0 or 1");
  const bool graded = u == 0;
  FreePolynomial total;
  for (const auto& [k, c] : p) {
    if (graded && k.first > 0) continue;
    FreePolynomial term{{Monomial{0}, c}};
    for (const auto& z : k.second) term = free_multiply(term, canonical_label(n, z, graded), graded);
    add_scaled(total, term, 1);
  }
  return total;
}

std::vector<RingElement> specialize(const EquivariantRelationSet& set, int u) {
  std::vector<RingElement> out;
  for (const auto& r : set.relations()) out.push_back(specialize(r.polynomial, set.rank(), u));
  return out;
}

}  // namespace hyperoct
