#include "hyperoct/rewrite_system.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "hyperoct/linear_algebra.hpp"

namespace hyperoct {

int monomial_degree(Monomial m) { return std::popcount(m); }

bool monomial_less(Monomial a, Monomial b) {
  const int da = monomial_degree(a), db = monomial_degree(b);
  return da != db ? da < db : a < b;
}

void add_scaled(FreePolynomial& target, const FreePolynomial& source, const Rational& c) {
  if (c == 0) return;
  for (const auto& [m, x] : source) {
    auto [it, inserted] = target.try_emplace(m, 0);
    it->second += c * x;
    if (it->second == 0) target.erase(it);
  }
}

FreePolynomial free_multiply(const FreePolynomial& a, const FreePolynomial& b, bool graded) {
  FreePolynomial r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (graded && (ma & mb)) continue;
      auto [it, inserted] = r.try_emplace(ma | mb, 0);
      it->second += ca * cb;
      if (it->second == 0) r.erase(it);
    }
  return r;
}

namespace {

Monomial bit(int id) { return Monomial{1} << id; }

FreePolynomial constant(const Rational& c) {
  FreePolynomial p;
  if (c != 0) p.emplace(0, c);
  return p;
}

FreePolynomial single(int id, const Rational& c = 1) { return {{bit(id), c}}; }

FreePolynomial operator+(FreePolynomial a, const FreePolynomial& b) {
  add_scaled(a, b, 1);
  return a;
}

FreePolynomial operator-(FreePolynomial a, const FreePolynomial& b) {
  add_scaled(a, b, -1);
  return a;
}

std::vector<int> bits_of(Monomial m) {
  std::vector<int> ids;
  while (m) {
    ids.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return ids;
}

}  // namespace

FreePolynomial canonical_label(int n, const ZLabel& label, bool graded) {
  if (label.max_index() > n) throw std::invalid_argument("label " + label.to_string() + " exceeds rank");
  const auto& gens = GeneratorSet::get(n);
  const Rational c = graded ? 0 : 1;
  if (label.is_loop()) {
    const int id = gens.id_of({0, std::abs(label.a), false});
    return label.a > 0 ? single(id) : constant(c) - single(id);
  }
  if (std::abs(label.a) > std::abs(label.b))
    return constant(c) - canonical_label(n, ZLabel::pair(label.b, label.a), graded);
  const int i = std::abs(label.a), j = std::abs(label.b);
  const int plus = gens.id_of({i, j, false}), minus = gens.id_of({i, j, true});
  const int zi = gens.id_of({0, i, false}), zj = gens.id_of({0, j, false});
  if (label.a > 0) return single(label.b > 0 ? plus : minus);
  if (label.b > 0) return single(minus) + single(zi) + single(zj) - constant(c);
  return single(plus) + single(zi) - single(zj);
}

std::string monomial_pretty(int n, Monomial m) {
  if (m == 0) return "1";
  const auto& gens = GeneratorSet::get(n);
  std::string out;
  for (int id : bits_of(m)) {
    if (!out.empty()) out += ' ';
    out += gens[id].pretty_name();
  }
  return out;
}

nlohmann::json monomial_json(int n, Monomial m) {
  const auto& gens = GeneratorSet::get(n);
  nlohmann::json j = nlohmann::json::array();
  for (int id : bits_of(m)) j.push_back(gens[id].json_name());
  return j;
}

std::vector<FreePolynomial> RewriteSystem::defining_relations(int n, bool graded) {
  std::vector<FreePolynomial> rels;
  const Rational one_c = graded ? 0 : 1;
  auto L = [&](int a, int b) { return canonical_label(n, ZLabel::pair(a, b), graded); };
  auto Z = [&](int a) { return canonical_label(n, ZLabel::loop(a), graded); };
  auto mul = [&](const FreePolynomial& x, const FreePolynomial& y) { return free_multiply(x, y, graded); };
  auto one_minus = [&](const FreePolynomial& x) { return constant(1) - x; };
  auto push = [&](FreePolynomial p) {
    if (!p.empty()) rels.push_back(std::move(p));
  };
  auto images = [](const std::vector<int>& letters) {
    std::vector<std::vector<int>> out;
    for (const auto& s : all_signed_permutations(static_cast<int>(letters.size()))) {
      std::vector<int> img;
      for (int p = 1; p <= s.rank(); ++p) img.push_back(s(p) > 0 ? letters[s(p) - 1] : -letters[-s(p) - 1]);
      out.push_back(std::move(img));
    }
    return out;
  };

  for (int i = 1; i <= n; ++i)
    for (int a : {i, -i}) {
      push(mul(Z(a), Z(a)) - (graded ? FreePolynomial{} : Z(a)));
      push(Z(a) + Z(-a) - constant(one_c));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (const auto& img : images({i, j})) {
        const int a = img[0], b = img[1];
        push(mul(L(a, b), L(a, b)) - (graded ? FreePolynomial{} : L(a, b)));
        push(L(a, b) + L(b, a) - constant(one_c));
        push(Z(a) - Z(b) + L(a, b) - L(-a, -b));
        if (graded) {
          push(mul(Z(a), L(a, b)) - mul(L(a, b), Z(b)) - mul(Z(a), Z(b)));
          push(mul(Z(b), L(a, -b)) - mul(Z(b), L(a, b)) - mul(L(a, b), L(a, -b)));
        } else {
          push(mul(mul(L(a, b), Z(a)), one_minus(Z(b))) + mul(mul(one_minus(L(a, b)), one_minus(Z(a))), Z(b)));
          push(mul(mul(Z(b), L(a, -b)), one_minus(L(a, b))) +
               mul(mul(one_minus(Z(b)), one_minus(L(a, -b))), L(a, b)));
        }
      }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (const auto& img : images({i, j, k})) {
          const int a = img[0], b = img[1], c = img[2];
          if (graded) {
            push(mul(L(a, b), L(b, c)) - mul(L(a, b), L(a, c)) - mul(L(b, c), L(a, c)));
          } else {
            push(mul(mul(L(a, b), L(b, c)), one_minus(L(a, c))) +
                 mul(mul(one_minus(L(a, b)), one_minus(L(b, c))), L(a, c)));
          }
        }
  return rels;
}

RewriteSystem::RewriteSystem(int n, bool graded, std::map<Monomial, FreePolynomial> rules)
    : n_(n), graded_(graded), rules_(std::move(rules)), radix_(n + 2, 1) {
  for (int j = 1; j <= n; ++j) radix_[j + 1] = radix_[j] * static_cast<std::size_t>(2 * j);
  nbc_count_ = radix_[n + 1];
}

std::shared_ptr<const RewriteSystem> RewriteSystem::derive(int n, bool graded) {
  if (n < 0 || n > kMaxRank) throw std::out_of_range("RewriteSystem: rank out of range");
  auto rels = defining_relations(n, graded);
  std::set<Monomial> support;
  for (const auto& r : rels)
    for (const auto& [m, c] : r) support.insert(m);
  std::vector<Monomial> columns(support.begin(), support.end());
  std::sort(columns.begin(), columns.end(), [](Monomial a, Monomial b) { return monomial_less(b, a); });
  std::map<Monomial, std::size_t> col;
  for (std::size_t i = 0; i < columns.size(); ++i) col.emplace(columns[i], i);
  RationalMatrix rows;
  for (const auto& r : rels) {
    std::vector<Rational> row(columns.size());
    for (const auto& [m, c] : r) row[col.at(m)] = c;
    rows.push_back(std::move(row));
  }
  auto pivots = row_reduce(rows);

  const auto& gens = GeneratorSet::get(n);
  std::set<Monomial> broken;
  for (int j = 1; j <= n; ++j) {
    auto ids = bits_of(gens.hand_mask(j));
    for (std::size_t x = 0; x < ids.size(); ++x)
      for (std::size_t y = x + 1; y < ids.size(); ++y) broken.insert(bit(ids[x]) | bit(ids[y]));
  }
  std::map<Monomial, FreePolynomial> rules;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Monomial lead = columns[pivots[r]];
    if (!broken.count(lead))
      throw std::logic_error("relation with leading monomial '" + monomial_pretty(n, lead) + "' is not a broken circuit");
    FreePolynomial rhs;
    for (std::size_t c = pivots[r] + 1; c < columns.size(); ++c)
      if (rows[r][c] != 0) rhs.emplace(columns[c], -rows[r][c]);
    rules.emplace(lead, std::move(rhs));
  }
  if (rules.size() != broken.size()) throw std::logic_error("some broken circuit has no rewrite rule");
  std::shared_ptr<const RewriteSystem> sys(new RewriteSystem(n, graded, std::move(rules)));
  sys->validate();
  return sys;
}

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<int, bool>, std::shared_ptr<const RewriteSystem>>& registry() {
  static std::map<std::pair<int, bool>, std::shared_ptr<const RewriteSystem>> r;
  return r;
}

}  // namespace

std::shared_ptr<const RewriteSystem> RewriteSystem::get(int n, bool graded) {
  {
    std::lock_guard lock(registry_mutex());
    if (auto it = registry().find({n, graded}); it != registry().end()) return it->second;
  }
  auto sys = derive(n, graded);
  std::lock_guard lock(registry_mutex());
  return registry().try_emplace({n, graded}, sys).first->second;
}

void RewriteSystem::preload(std::shared_ptr<const RewriteSystem> system) {
  std::lock_guard lock(registry_mutex());
  registry().try_emplace({system->rank(), system->graded()}, std::move(system));
}

void RewriteSystem::validate() const {
  const auto& gens = GeneratorSet::get(n_);
  std::size_t expected = 0;
  for (int j = 1; j <= n_; ++j) {
    const int h = monomial_degree(gens.hand_mask(j));
    expected += static_cast<std::size_t>(h * (h - 1) / 2);
  }
  if (rules_.size() != expected) throw std::invalid_argument("rewrite rules: wrong number of rules");
  for (const auto& [lhs, rhs] : rules_) {
    if (monomial_degree(lhs) != 2 || is_nbc(lhs)) throw std::invalid_argument("rewrite rules: left side is not a broken circuit");
    for (const auto& [m, c] : rhs) {
      if (!is_nbc(m)) throw std::invalid_argument("rewrite rules: right side not in normal form");
      if (!monomial_less(m, lhs)) throw std::invalid_argument("rewrite rules: right side not smaller than left side");
      if (c == 0) throw std::invalid_argument("rewrite rules: zero coefficient");
    }
  }
}

nlohmann::json RewriteSystem::to_json() const {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& [lhs, rhs] : rules_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& [m, c] : rhs) r.push_back({{"monomial", monomial_json(n_, m)}, {"coeff", format_rational(c)}});
    rules.push_back({{"lhs", monomial_json(n_, lhs)}, {"rhs", r}});
  }
  return {{"rank", n_}, {"graded", graded_}, {"rules", rules}};
}

std::shared_ptr<const RewriteSystem> RewriteSystem::from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("rank").get<int>();
    const bool graded = j.at("graded").get<bool>();
    if (n < 0 || n > kMaxRank) throw std::invalid_argument("rewrite rules JSON: rank out of range");
    const auto& gens = GeneratorSet::get(n);
    auto parse_monomial = [&](const nlohmann::json& names) {
      Monomial m = 0;
      for (const auto& name : names) {
        Monomial b = bit(gens.id_of_json_name(name.get<std::string>()));
        if (m & b) throw std::invalid_argument("rewrite rules JSON: repeated generator");
        m |= b;
      }
      return m;
    };
    std::map<Monomial, FreePolynomial> rules;
    for (const auto& r : j.at("rules")) {
      FreePolynomial rhs;
      for (const auto& t : r.at("rhs")) rhs[parse_monomial(t.at("monomial"))] += parse_rational(t.at("coeff").get<std::string>());
      if (!rules.emplace(parse_monomial(r.at("lhs")), std::move(rhs)).second)
        throw std::invalid_argument("rewrite rules JSON: duplicate rule");
    }
    std::shared_ptr<const RewriteSystem> sys(new RewriteSystem(n, graded, std::move(rules)));
    sys->validate();
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("rewrite rules JSON: ") + e.what());
  }
}

bool RewriteSystem::is_nbc(Monomial m) const {
  const auto& gens = GeneratorSet::get(n_);
  if (m >> gens.size()) return false;
  for (int j = 1; j <= n_; ++j)
    if (monomial_degree(m & gens.hand_mask(j)) > 1) return false;
  return true;
}

std::size_t RewriteSystem::nbc_index(Monomial m) const {
  if (!is_nbc(m)) throw std::invalid_argument("nbc_index: not an nbc monomial");
  const auto& gens = GeneratorSet::get(n_);
  std::size_t index = 0;
  for (int j = 1; j <= n_; ++j) {
    const Monomial h = m & gens.hand_mask(j);
    if (!h) continue;
    const Generator& g = gens[std::countr_zero(h)];
    const std::size_t choice = g.is_loop() ? 1 : static_cast<std::size_t>(2 + 2 * (g.i - 1) + (g.bar ? 1 : 0));
    index += choice * radix_[j];
  }
  return index;
}

Monomial RewriteSystem::nbc_monomial(std::size_t index) const {
  if (index >= nbc_count_) throw std::out_of_range("nbc_monomial: index out of range");
  const auto& gens = GeneratorSet::get(n_);
  Monomial m = 0;
  for (int j = 1; j <= n_; ++j) {
    const std::size_t choice = (index / radix_[j]) % static_cast<std::size_t>(2 * j);
    if (choice == 0) continue;
    Generator g = choice == 1 ? Generator{0, j, false}
                              : Generator{static_cast<int>((choice - 2) / 2) + 1, j, (choice - 2) % 2 == 1};
    m |= bit(gens.id_of(g));
  }
  return m;
}

void RewriteSystem::build_table() const {
  const auto g = static_cast<std::size_t>(GeneratorSet::get(n_).size());
  table_.assign(nbc_count_ * g, FreePolynomial{});
  table_state_.assign(nbc_count_ * g, 0);
  std::uint64_t steps = 0;
  for (std::size_t i = 0; i < nbc_count_; ++i)
    for (std::size_t q = 0; q < g; ++q) table_product(nbc_monomial(i), static_cast<int>(q), steps);
}

const FreePolynomial& RewriteSystem::table_product(Monomial m, int generator, std::uint64_t& steps) const {
  const auto& gens = GeneratorSet::get(n_);
  const std::size_t slot = nbc_index(m) * static_cast<std::size_t>(gens.size()) + static_cast<std::size_t>(generator);
  if (table_state_[slot] == 2) return table_[slot];
  if (table_state_[slot] == 1) throw std::logic_error("rewrite rules are cyclic at " + monomial_pretty(n_, m));
  if (++steps > kStepLimit) throw std::runtime_error("rewrite step limit exceeded");
  table_state_[slot] = 1;
  FreePolynomial result;
  const Monomial b = bit(generator);
  const Monomial same_hand = m & gens.hand_mask(gens[generator].hand());
  if (m & b) {
    if (!graded_) result.emplace(m, 1);
  } else if (!same_hand) {
    result.emplace(m | b, 1);
  } else {
    const Monomial rest = m & ~same_hand;
    for (const auto& [t, c] : rules_.at(same_hand | b)) {
      FreePolynomial cur{{rest, 1}};
      for (int q : bits_of(t)) {
        FreePolynomial next;
        for (const auto& [mm, cc] : cur) add_scaled(next, table_product(mm, q, steps), cc);
        cur = std::move(next);
      }
      add_scaled(result, cur, c);
    }
  }
  table_[slot] = std::move(result);
  table_state_[slot] = 2;
  return table_[slot];
}

const FreePolynomial& RewriteSystem::multiply_generator(Monomial m, int generator) const {
  std::call_once(table_once_, [this] { build_table(); });
  const auto g = static_cast<std::size_t>(GeneratorSet::get(n_).size());
  return table_[nbc_index(m) * g + static_cast<std::size_t>(generator)];
}

FreePolynomial RewriteSystem::multiply(const FreePolynomial& a, const FreePolynomial& b) const {
  FreePolynomial result;
  for (const auto& [mb, cb] : b) {
    FreePolynomial cur = a;
    for (int q : bits_of(mb)) {
      FreePolynomial next;
      for (const auto& [m, c] : cur) add_scaled(next, multiply_generator(m, q), c);
      cur = std::move(next);
    }
    add_scaled(result, cur, cb);
  }
  return result;
}

FreePolynomial RewriteSystem::normal_form(const FreePolynomial& p) const {
  FreePolynomial result;
  for (const auto& [m, c] : p) {
    FreePolynomial cur{{0, 1}};
    for (int q : bits_of(m)) {
      FreePolynomial next;
      for (const auto& [mm, cc] : cur) add_scaled(next, multiply_generator(mm, q), cc);
      cur = std::move(next);
    }
    add_scaled(result, cur, c);
  }
  return result;
}

FreePolynomial RewriteSystem::naive_reduce(FreePolynomial p, bool pick_last) const {
  const auto& gens = GeneratorSet::get(n_);
  for (std::uint64_t steps = 0;; ++steps) {
    if (steps > kStepLimit) throw std::runtime_error("rewrite step limit exceeded");
    Monomial worst = 0;
    bool found = false;
    for (const auto& [m, c] : p)
      if (!is_nbc(m) && (!found || monomial_less(worst, m))) {
        worst = m;
        found = true;
      }
    if (!found) return p;
    Monomial circuit = 0;
    for (int j = pick_last ? n_ : 1; pick_last ? j >= 1 : j <= n_; j += pick_last ? -1 : 1) {
      auto ids = bits_of(worst & gens.hand_mask(j));
      if (ids.size() < 2) continue;
      circuit = pick_last ? bit(ids[ids.size() - 1]) | bit(ids[ids.size() - 2]) : bit(ids[0]) | bit(ids[1]);
      break;
    }
    const Rational c = p.at(worst);
    p.erase(worst);
    add_scaled(p, free_multiply(rules_.at(circuit), {{worst & ~circuit, 1}}, graded_), c);
  }
}

std::vector<std::string> RewriteSystem::critical_pair_failures() const {
  std::vector<std::string> failures;
  auto check = [&](const FreePolynomial& s, const std::string& what) {
    for (bool last : {false, true})
      if (!naive_reduce(s, last).empty()) {
        failures.push_back(what);
        return;
      }
  };
  for (auto a = rules_.begin(); a != rules_.end(); ++a) {
    for (auto b = std::next(a); b != rules_.end(); ++b) {
      if (monomial_degree(a->first & b->first) != 1) continue;
      FreePolynomial s = free_multiply(a->second, {{b->first & ~a->first, 1}}, graded_);
      add_scaled(s, free_multiply(b->second, {{a->first & ~b->first, 1}}, graded_), -1);
      check(s, monomial_pretty(n_, a->first) + " / " + monomial_pretty(n_, b->first));
    }
    for (int q : bits_of(a->first)) {
      FreePolynomial s = free_multiply(a->second, {{bit(q), 1}}, graded_);
      if (!graded_) add_scaled(s, a->second, -1);
      check(s, monomial_pretty(n_, a->first) + " / square of " + GeneratorSet::get(n_)[q].pretty_name());
    }
  }
  return failures;
}

}  // namespace hyperoct
