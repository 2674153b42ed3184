#include "hyperoct/character_theory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hyperoct/bn_group.hpp"

namespace hyperoct {
namespace {

Partition from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int l = static_cast<int>(beta.size());
  Partition p;
  for (int i = 0; i < l; ++i) {
    int part = beta[i] - (l - 1 - i);
    if (part > 0) p.push_back(part);
  }
  return p;
}

Integer mn_rec(const Partition& lambda, const Partition& mu, std::size_t start,
               std::map<std::pair<Partition, Partition>, Integer>& memo) {
  if (start == mu.size()) return lambda.empty() ? 1 : 0;
  Partition rest(mu.begin() + static_cast<long>(start), mu.end());
  auto key = std::make_pair(lambda, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int k = mu[start];
  const int l = static_cast<int>(lambda.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
  std::set<int> present(beta.begin(), beta.end());
  Integer total = 0;
  for (int i = 0; i < l; ++i) {
    const int b = beta[i];
    if (b - k < 0 || present.count(b - k)) continue;
    int between = 0;
    for (int x : beta)
      if (x > b - k && x < b) ++between;
    auto moved = beta;
    moved[i] = b - k;
    Integer v = mn_rec(from_beta(moved), mu, start + 1, memo);
    total += (between % 2 == 0) ? v : Integer(-v);
  }
  memo.emplace(std::move(key), total);
  return total;
}

Rational from_u64(std::uint64_t x) { return Rational(static_cast<unsigned long>(x)); }

SignedPartition signed_union(const SignedPartition& a, const SignedPartition& b) {
  return {partition_union(a.positive, b.positive), partition_union(a.negative, b.negative)};
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

}  // namespace

Integer sn_character(const Partition& lambda, const Partition& mu) {
  const int a = std::accumulate(lambda.begin(), lambda.end(), 0);
  const int b = std::accumulate(mu.begin(), mu.end(), 0);
  if (a != b) throw std::invalid_argument("sn_character: sizes differ");
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, Integer> memo;
  std::lock_guard lock(mutex);
  return mn_rec(lambda, mu, 0, memo);
}

ClassFunction pullback_from_sn(const Partition& lambda) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  ClassFunction f(n);
  const auto labels = signed_partitions(n);
  for (std::size_t c = 0; c < labels.size(); ++c)
    f[c] = Rational(sn_character(lambda, partition_union(labels[c].positive, labels[c].negative)));
  return f;
}

LinearCharacters linear_characters(int n) {
  const auto labels = signed_partitions(n);
  LinearCharacters lc{ClassFunction(n), ClassFunction(n), ClassFunction(n), ClassFunction(n)};
  for (std::size_t c = 0; c < labels.size(); ++c) {
    const auto& l = labels[c];
    // A negative cycle carries an odd number of sign changes.
    const int neg = (l.negative.size() % 2 == 0) ? 1 : -1;
    const int sgn = ((n - l.length()) % 2 == 0) ? 1 : -1;
    lc.trivial[c] = 1;
    lc.negative_sign[c] = neg;
    lc.type_a_sign[c] = sgn;
    lc.product[c] = neg * sgn;
  }
  return lc;
}

ClassFunction induction_product(const ClassFunction& a, const ClassFunction& b) {
  const int p = a.rank(), q = b.rank(), n = p + q;
  const auto la = signed_partitions(p), lb = signed_partitions(q), ln = signed_partitions(n);
  std::map<SignedPartition, std::size_t> index;
  for (std::size_t c = 0; c < ln.size(); ++c) index.emplace(ln[c], c);
  std::vector<Rational> sums(ln.size());
  const Rational op = from_u64(hyperoctahedral_order(p)), oq = from_u64(hyperoctahedral_order(q));
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (a[i] == 0) continue;
    const Rational da = op / from_u64(centralizer_order(la[i]));
    for (std::size_t j = 0; j < lb.size(); ++j) {
      if (b[j] == 0) continue;
      const Rational db = oq / from_u64(centralizer_order(lb[j]));
      sums[index.at(signed_union(la[i], lb[j]))] += da * db * a[i] * b[j];
    }
  }
  ClassFunction r(n);
  const Rational on = from_u64(hyperoctahedral_order(n));
  for (std::size_t c = 0; c < ln.size(); ++c) {
    const Rational size = on / from_u64(centralizer_order(ln[c]));
    r[c] = on / (size * op * oq) * sums[c];
  }
  return r;
}

ClassFunction bn_irreducible(const SignedPartition& lambda) {
  const int p = std::accumulate(lambda.positive.begin(), lambda.positive.end(), 0);
  const int q = std::accumulate(lambda.negative.begin(), lambda.negative.end(), 0);
  auto positive = pullback_from_sn(lambda.positive);
  auto negative = pullback_from_sn(lambda.negative) * linear_characters(q).negative_sign;
  if (q == 0) return positive;
  if (p == 0) return negative;
  return induction_product(positive, negative);
}

CharacterTable::CharacterTable(int n, std::vector<ClassFunction> rows)
    : n_(n), labels_(signed_partitions(n)), rows_(std::move(rows)) {
  if (rows_.size() != labels_.size()) throw std::invalid_argument("character table: wrong number of rows");
  for (const auto& r : rows_)
    if (r.rank() != n) throw std::invalid_argument("character table: row of wrong rank");
}

const ClassFunction& CharacterTable::row(const SignedPartition& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return rows_[i];
  throw std::invalid_argument("character table: unknown label " + label.to_string());
}

nlohmann::json CharacterTable::to_json() const {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& l : labels_) classes.push_back(l.to_string());
  nlohmann::json rows = nlohmann::json::object();
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : rows_[i].values()) values.push_back(format_rational(v));
    rows[labels_[i].to_string()] = values;
  }
  return {{"n", n_}, {"classes", classes}, {"rows", rows}};
}

CharacterTable CharacterTable::from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0 || n > BnGroup::kMaxEnumeratedRank) throw std::invalid_argument("character table JSON: bad rank");
    const auto labels = signed_partitions(n);
    const auto& classes = j.at("classes");
    if (!classes.is_array() || classes.size() != labels.size())
      throw std::invalid_argument("character table JSON: class list mismatch");
    for (std::size_t c = 0; c < labels.size(); ++c)
      if (classes[c].get<std::string>() != labels[c].to_string())
        throw std::invalid_argument("character table JSON: class order mismatch");
    const auto& rows = j.at("rows");
    if (!rows.is_object() || rows.size() != labels.size()) throw std::invalid_argument("character table JSON: row count mismatch");
    std::vector<ClassFunction> out;
    for (const auto& l : labels) {
      const auto& values = rows.at(l.to_string());
      if (!values.is_array() || values.size() != labels.size())
        throw std::invalid_argument("character table JSON: row length mismatch");
      std::vector<Rational> v;
      for (const auto& x : values) v.push_back(parse_rational(x.get<std::string>()));
      out.emplace_back(n, std::move(v));
    }
    return CharacterTable(n, std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("character table JSON: ") + e.what());
  }
}

CharacterTable compute_character_table(int n) {
  std::vector<ClassFunction> rows;
  for (const auto& l : signed_partitions(n)) rows.push_back(bn_irreducible(l));
  return CharacterTable(n, std::move(rows));
}

namespace {

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, CharacterTable>& table_registry() {
  static std::map<int, CharacterTable> r;
  return r;
}

}  // namespace

const CharacterTable& character_table(int n) {
  std::lock_guard lock(table_mutex());
  auto it = table_registry().find(n);
  if (it == table_registry().end()) it = table_registry().emplace(n, compute_character_table(n)).first;
  return it->second;
}

void preload_character_table(CharacterTable table) {
  std::lock_guard lock(table_mutex());
  table_registry().try_emplace(table.rank(), std::move(table));
}

SubgroupCharacter linear_character_closure(int n, const std::vector<CharacterGenerator>& generators) {
  long m = 1;
  for (const auto& g : generators) {
    if (g.element.rank() != n) throw std::invalid_argument("linear_character_closure: rank mismatch");
    if (g.root_order < 1) throw std::invalid_argument("linear_character_closure: bad root order");
    m = m / gcd_long(m, g.root_order) * g.root_order;
  }
  std::vector<int> gen_exp;
  for (const auto& g : generators) {
    long e = (static_cast<long>(g.exponent) * (m / g.root_order)) % m;
    gen_exp.push_back(static_cast<int>(e < 0 ? e + m : e));
  }
  SubgroupCharacter chi;
  chi.rank = n;
  chi.root_order = static_cast<int>(m);
  std::unordered_map<SignedPermutation, std::size_t> seen;
  chi.elements.push_back(SignedPermutation::identity(n));
  chi.exponents.push_back(0);
  seen.emplace(chi.elements.back(), 0);
  for (std::size_t head = 0; head < chi.elements.size(); ++head) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      SignedPermutation y = compose(chi.elements[head], generators[g].element);
      const int e = static_cast<int>((chi.exponents[head] + gen_exp[g]) % m);
      auto [it, inserted] = seen.emplace(y, chi.elements.size());
      if (inserted) {
        chi.elements.push_back(y);
        chi.exponents.push_back(e);
      } else if (chi.exponents[it->second] != e) {
        throw std::domain_error("linear character is not well defined at " + y.to_string());
      }
    }
  }
  return chi;
}

SubgroupCharacter rho_character(const SignedPartition& lambda) {
  std::vector<CharacterGenerator> gens;
  for (const auto& g : centralizer_generators(lambda)) {
    switch (g.kind) {
      case CentralizerGeneratorKind::kCycle:
        gens.push_back({g.element, 1, g.part});
        break;
      case CentralizerGeneratorKind::kNegativeCycle:
        gens.push_back({g.element, 1, 2 * g.part});
        break;
      default:
        gens.push_back({g.element, 0, 1});
    }
  }
  return linear_character_closure(lambda.size(), gens);
}

ClassFunction induce_character(const SubgroupCharacter& chi) {
  const int n = chi.rank;
  const auto& group = BnGroup::get(n);
  std::unordered_map<SignedPermutation, int> value;
  for (std::size_t i = 0; i < chi.elements.size(); ++i) value.emplace(chi.elements[i], chi.exponents[i]);
  ClassFunction out(n);
  for (std::size_t c = 0; c < group.classes().size(); ++c) {
    const auto& g = group.classes()[c].representative;
    std::vector<Rational> counts(chi.root_order);
    for (const auto& x : group.elements()) {
      auto it = value.find(compose(compose(x.inverse(), g), x));
      if (it != value.end()) counts[it->second] += 1;
    }
    Cyclotomic s = Cyclotomic::from_polynomial(chi.root_order, std::move(counts));
    s *= Rational(1, static_cast<long>(chi.order()));
    out[c] = s.rational_value();
  }
  return out;
}

std::vector<std::pair<SignedPartition, Integer>> decompose(const ClassFunction& chi) {
  const auto& table = character_table(chi.rank());
  std::vector<std::pair<SignedPartition, Integer>> out;
  ClassFunction rebuilt(chi.rank());
  for (std::size_t i = 0; i < table.rows().size(); ++i) {
    Rational m = inner_product(chi, table.rows()[i]);
    if (m.get_den() != 1 || m < 0) throw std::domain_error("not a character: multiplicity " + m.get_str());
    if (m != 0) {
      out.emplace_back(table.labels()[i], m.get_num());
      rebuilt += table.rows()[i] * m;
    }
  }
  if (rebuilt != chi) throw std::domain_error("not a class function in the span of the irreducibles");
  return out;
}

std::string decomposition_to_string(const std::vector<std::pair<SignedPartition, Integer>>& d) {
  if (d.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += " + ";
    if (d[i].second != 1) out += d[i].second.get_str() + "*";
    out += "chi" + d[i].first.to_string();
  }
  return out;
}

SignedPermutation coxeter_element(int N) {
  std::vector<int> v(N);
  for (int i = 0; i + 1 < N; ++i) v[i] = i + 2;
  v[N - 1] = -1;
  return SignedPermutation::from_one_line(std::span<const int>(v));
}

ClassFunction coset_permutation_character(const SignedPermutation& generator) {
  const int N = generator.rank();
  const auto& group = BnGroup::get(N);
  std::unordered_set<SignedPermutation> subgroup;
  for (SignedPermutation h = SignedPermutation::identity(N);;) {
    subgroup.insert(h);
    h = compose(h, generator);
    if (h == SignedPermutation::identity(N)) break;
  }
  std::vector<SignedPermutation> reps;
  std::unordered_set<SignedPermutation> covered;
  for (const auto& x : group.elements()) {
    if (covered.count(x)) continue;
    reps.push_back(x);
    for (const auto& h : subgroup) covered.insert(compose(x, h));
  }
  ClassFunction out(N);
  for (std::size_t c = 0; c < group.classes().size(); ++c) {
    const auto& g = group.classes()[c].representative;
    long fixed = 0;
    for (const auto& x : reps)
      if (subgroup.count(compose(compose(x.inverse(), g), x))) ++fixed;
    out[c] = fixed;
  }
  return out;
}

}  // namespace hyperoct
