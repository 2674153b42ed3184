#include "hyperoct/presented_rings.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperoct {

std::string Space::name() const {
  switch (kind) {
    case SpaceKind::kZ1:
      return "Z1(" + std::to_string(rank) + ")";
    case SpaceKind::kZ3:
      return "Z3(" + std::to_string(rank) + ")";
    case SpaceKind::kY1:
      return "Y1(" + std::to_string(rank) + ")";
    case SpaceKind::kY3:
      return "Y3(" + std::to_string(rank) + ")";
  }
  return "?";
}

RingElement RingElement::constant(Space space, const Rational& c) {
  RingElement r(space);
  if (c != 0) r.terms_.emplace(0, c);
  return r;
}

RingElement RingElement::generator(Space space, const Generator& g) {
  RingElement r(space);
  r.terms_.emplace(Monomial{1} << GeneratorSet::get(space.rank).id_of(g), 1);
  return r;
}

RingElement RingElement::from_free(Space space, const FreePolynomial& p) {
  RingElement r(space);
  r.terms_ = space.rewriting().normal_form(p);
  return r;
}

int RingElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

RingElement RingElement::homogeneous_part(int k) const {
  RingElement r(space_);
  for (const auto& [m, c] : terms_)
    if (monomial_degree(m) == k) r.terms_.emplace(m, c);
  return r;
}

Rational RingElement::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RingElement::check_compatible(const RingElement& other) const {
  if (!(space_.rank == other.space_.rank && space_.graded() == other.space_.graded()))
    throw std::invalid_argument("ring elements from different rings: " + space_.name() + ", " + other.space_.name());
}

RingElement& RingElement::operator+=(const RingElement& other) {
  check_compatible(other);
  add_scaled(terms_, other.terms_, 1);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  check_compatible(other);
  add_scaled(terms_, other.terms_, -1);
  return *this;
}

RingElement& RingElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, x] : terms_) x *= c;
  }
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.check_compatible(b);
  RingElement r(a.space_);
  r.terms_ = a.space_.rewriting().multiply(a.terms_, b.terms_);
  return r;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return monomial_less(y.first, x.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (m == 0) {
      out += pretty_rational(mag);
    } else {
      if (mag != 1) out += pretty_rational(mag) + " ";
      out += monomial_pretty(space_.rank, m);
    }
    first = false;
  }
  return out;
}

nlohmann::json RingElement::to_json() const {
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return monomial_less(y.first, x.first); });
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [m, c] : ordered) j.push_back({{"monomial", monomial_json(space_.rank, m)}, {"coeff", format_rational(c)}});
  return j;
}

RingElement RingElement::from_json(Space space, const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("ring element JSON must be an array");
  const auto& gens = GeneratorSet::get(space.rank);
  FreePolynomial p;
  try {
    for (const auto& t : j) {
      Monomial m = 0;
      bool repeated = false;
      for (const auto& name : t.at("monomial")) {
        Monomial b = Monomial{1} << gens.id_of_json_name(name.get<std::string>());
        repeated = repeated || (m & b);
        m |= b;
      }
      Rational c = parse_rational(t.at("coeff").get<std::string>());
      if (repeated && space.graded()) continue;
      add_scaled(p, FreePolynomial{{m, 1}}, c);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("ring element JSON: ") + e.what());
  }
  return from_free(space, p);
}

RingElement canonicalize(Space space, const ZLabel& label) {
  RingElement r(space);
  return RingElement::from_free(space, canonical_label(space.rank, label, space.graded()));
}

RingElement parse_label_expression(Space space, const std::string& text) {
  std::istringstream in(text);
  std::string token;
  RingElement total(space);
  RingElement term = RingElement::constant(space, 1);
  bool have_factor = false;
  int sign = 1;
  auto flush = [&] {
    if (have_factor) total += term * Rational(sign);
    term = RingElement::constant(space, 1);
    have_factor = false;
    sign = 1;
  };
  while (in >> token) {
    if (token == "+" || token == "-") {
      flush();
      sign = token == "-" ? -1 : 1;
      continue;
    }
    if (token[0] == '-' && token.size() > 1) {
      sign = -sign;
      token = token.substr(1);
    }
    if (token[0] == 'z') {
      term = term * canonicalize(space, ZLabel::parse(token));
    } else {
      term *= parse_rational(token);
    }
    have_factor = true;
  }
  flush();
  return total;
}

namespace {

int unshift(int letter) { return letter > 0 ? letter - 1 : letter + 1; }

// y_{0,b,c} with b, c not the letter 0.
RingElement y_from_zero(Space space, int b, int c) {
  if (b == -1) return canonicalize(space, ZLabel::loop(unshift(c)));
  if (c == -1 || b == -c) {
    return RingElement::constant(space, space.graded() ? 0 : 1) - canonicalize(space, ZLabel::loop(unshift(b)));
  }
  return canonicalize(space, ZLabel::pair(unshift(b), unshift(c)));
}

}  // namespace

RingElement y_label(Space space, int a, int b, int c) {
  const int limit = space.rank + 1;
  for (int x : {a, b, c})
    if (x == 0 || std::abs(x) > limit) throw std::invalid_argument("y_label: letter out of range");
  if (a == b || b == c || a == c) throw std::invalid_argument("y_label: letters must be distinct");
  std::array<int, 3> t{a, b, c};
  auto rotate_to = [&](int letter) {
    while (t[0] != letter) std::rotate(t.begin(), t.begin() + 1, t.end());
  };
  if (std::find(t.begin(), t.end(), 1) != t.end()) {
    rotate_to(1);
    return y_from_zero(space, t[1], t[2]);
  }
  if (std::find(t.begin(), t.end(), -1) != t.end()) {
    rotate_to(-1);
    return y_from_zero(space, -t[1], -t[2]);
  }
  return y_from_zero(space, a, b) - y_from_zero(space, a, c) + y_from_zero(space, b, c);
}

std::vector<Monomial> nbc_basis(int n) {
  const auto& rw = *RewriteSystem::get(n, true);
  std::vector<Monomial> out(rw.nbc_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rw.nbc_monomial(i);
  return out;
}

std::vector<Monomial> nbc_basis(int n, int degree) {
  auto all = nbc_basis(n);
  std::vector<Monomial> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [&](Monomial m) { return monomial_degree(m) == degree; });
  return out;
}

int loop_degree(int n, Monomial m) {
  const auto& gens = GeneratorSet::get(n);
  int d = 0;
  for (int id = 0; id < gens.size(); ++id)
    if ((m >> id) & 1 && gens.is_loop_id(id)) ++d;
  return d;
}

std::vector<std::uint64_t> hilbert_series(int n) {
  std::vector<std::uint64_t> p{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> q(p.size() + 1, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      q[k] += p[k];
      q[k + 1] += p[k] * static_cast<std::uint64_t>(2 * i - 1);
    }
    p = std::move(q);
  }
  return p;
}

Action::Action(Space space, const SignedPermutation& sigma) : space_(space) {
  if (sigma.rank() != space.group_rank())
    throw std::invalid_argument("act: group element of rank " + std::to_string(sigma.rank()) + " on " + space.name());
  const auto& gens = GeneratorSet::get(space.rank);
  auto shift = [](int x) { return x > 0 ? x + 1 : x - 1; };
  for (int id = 0; id < gens.size(); ++id) {
    const ZLabel label = gens[id].label();
    if (!space.lifted()) {
      images_.push_back(canonicalize(space, label.relabel(sigma)));
    } else if (label.is_loop()) {
      images_.push_back(y_label(space, sigma(1), sigma(-1), sigma(shift(label.a))));
    } else {
      images_.push_back(y_label(space, sigma(1), sigma(shift(label.a)), sigma(shift(label.b))));
    }
  }
}

RingElement Action::apply_monomial(Monomial m) const {
  RingElement r = RingElement::constant(space_, 1);
  for (Monomial rest = m; rest; rest &= rest - 1) r = r * images_[std::countr_zero(rest)];
  return r;
}

RingElement Action::apply(const RingElement& x) const {
  RingElement r(space_);
  for (const auto& [m, c] : x.terms()) r += apply_monomial(m) * c;
  return r;
}

RingElement act(const SignedPermutation& sigma, const RingElement& x) { return Action(x.space(), sigma).apply(x); }

std::vector<ClassFunction> graded_character(Space space) {
  const int n = space.group_rank();
  const auto classes = conjugacy_classes(n);
  const auto basis = nbc_basis(space.rank);
  std::vector<ClassFunction> out(space.rank + 1, ClassFunction(n));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Action a(space, classes[c].representative);
    for (Monomial m : basis) out[monomial_degree(m)][c] += a.apply_monomial(m).coefficient(m);
  }
  return out;
}

std::map<std::pair<int, int>, ClassFunction> bigraded_character(int n) {
  const Space space = Space::Z3(n);
  const auto classes = conjugacy_classes(n);
  const auto basis = nbc_basis(n);
  std::map<std::pair<int, int>, ClassFunction> out;
  for (int k = 0; k <= n; ++k)
    for (int l = 0; l <= k; ++l) out.emplace(std::make_pair(k, l), ClassFunction(n));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Action a(space, classes[c].representative);
    for (Monomial m : basis) out.at({monomial_degree(m), loop_degree(n, m)})[c] += a.apply_monomial(m).coefficient(m);
  }
  return out;
}

SignedSetPartition type_of(int n, const std::vector<Generator>& factors) {
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<bool> marked(n + 1, false);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : factors) {
    if (g.j < 1 || g.j > n || g.i < 0 || g.i >= g.j) throw std::invalid_argument("type_of: generator outside rank");
    if (g.is_loop()) {
      marked[g.j] = true;
    } else {
      parent[find(g.i)] = find(g.j);
    }
  }
  std::map<int, std::vector<int>> blocks;
  for (int v = 1; v <= n; ++v) blocks[find(v)].push_back(v);
  SignedSetPartition t;
  for (auto& [root, block] : blocks) {
    const bool negative = std::any_of(block.begin(), block.end(), [&](int v) { return marked[v]; });
    (negative ? t.negative_blocks : t.positive_blocks).push_back(block);
  }
  t.normalize();
  return t;
}

SignedSetPartition type_of(int n, Monomial m) {
  const auto& gens = GeneratorSet::get(n);
  std::vector<Generator> factors;
  for (Monomial rest = m; rest; rest &= rest - 1) factors.push_back(gens[std::countr_zero(rest)]);
  return type_of(n, factors);
}

ClassFunction type_character(const SignedPartition& lambda) {
  const int n = lambda.size();
  const Space space = Space::Z3(n);
  const auto classes = conjugacy_classes(n);
  std::vector<Monomial> basis;
  for (Monomial m : nbc_basis(n))
    if (type_of(n, m).shape() == lambda) basis.push_back(m);
  ClassFunction out(n);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    Action a(space, classes[c].representative);
    for (Monomial m : basis) out[c] += a.apply_monomial(m).coefficient(m);
  }
  return out;
}

}  // namespace hyperoct
